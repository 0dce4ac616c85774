#ifndef DRINMOD_FFIELD_HPP
#define DRINMOD_FFIELD_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "drinmod/fq.hpp"
#include "drinmod/ring.hpp"

namespace drinmod {

class ExtField;
using ExtFieldPtr = std::shared_ptr<const ExtField>;
class ExtElem;

/// F_{q^d} as base.modulus-polynomial residues over a tabled F_q: elements
/// are coefficient vectors of length d. The modulus is the canonical monic
/// irreducible of degree d (least code integer sum c_i q^i), so equal
/// (q, d) always name the same field and ExtField::make interns instances.
/// Degree 1 is allowed (modulus x), making towers uniform.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  static ExtFieldPtr make(const FqPtr& base, unsigned degree);

  const FqPtr& base() const { return base_; }
  unsigned q() const { return base_->q(); }
  unsigned degree() const { return d_; }
  uint64_t order() const { return order_; }  // q^d
  /// c_0..c_{d-1} of the canonical modulus x^d + ... + c_0.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_base(uint32_t code) const;           // constant embedding of F_q
  ExtElem gen() const;                              // the class of x
  ExtElem from_code(uint64_t code) const;           // base-q digit vector
  uint64_t to_code(const ExtElem& x) const;
  /// Least-code multiplicative generator (computed lazily, cached).
  ExtElem multiplicative_generator() const;

 private:
  ExtField(FqPtr base, unsigned degree);

  FqPtr base_;
  unsigned d_;
  uint64_t order_;
  std::vector<uint32_t> mod_;
  mutable std::atomic<uint64_t> gen_code_{0};  // 0 = not yet computed
};

/// Element of an ExtField; empty field pointer is the universal zero.
/// Provides the coefficient-ring surface shared with RingElem/QuotElem
/// plus field division, so skew division and J-evaluation work over it.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(ExtFieldPtr f, std::vector<uint32_t> v);

  const ExtFieldPtr& field() const { return f_; }
  const std::vector<uint32_t>& coords() const { return v_; }
  bool is_zero() const;
  bool is_one() const;

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  bool operator==(const ExtElem& o) const;
  bool operator!=(const ExtElem& o) const { return !(*this == o); }

  ExtElem inv() const;
  ExtElem pow(uint64_t e) const;
  ExtElem frobenius(unsigned k) const;  // x^{q^k}
  ExtElem qth_root() const;             // inverse of frobenius(1)

  /// x in F_{q^j} (as a subfield of this field) iff x^{q^j} = x.
  bool in_subfield(unsigned j) const;

  std::string str() const;  // polynomial in u over F_q

 private:
  friend class ExtField;
  ExtFieldPtr f_;
  std::vector<uint32_t> v_;  // length = field degree
};

inline ExtElem frob(const ExtElem& a, unsigned k) { return a.frobenius(k); }
inline ExtElem qth_root(const ExtElem& a) { return a.qth_root(); }

/// The canonical embedding F_{q^n} -> F_{q^{nm}} sending the source
/// generator to the least root (in code order) of the source modulus.
/// Identity when the fields coincide.
class Embedding {
 public:
  Embedding(ExtFieldPtr from, ExtFieldPtr to);
  ExtElem operator()(const ExtElem& x) const;

  const ExtFieldPtr& from() const { return from_; }
  const ExtFieldPtr& to() const { return to_; }

 private:
  ExtFieldPtr from_, to_;
  std::vector<ExtElem> gen_powers_;  // rho^0 .. rho^{n-1}
};

/// Image of a ring element under T -> theta, g_i -> g_values[i-1], with
/// coefficients embedded through the prime/base field. Negative T powers
/// require theta != 0.
ExtElem specialize(const RingElem& x, const ExtElem& theta,
                   std::span<const ExtElem> g_values);

}  // namespace drinmod

#endif
