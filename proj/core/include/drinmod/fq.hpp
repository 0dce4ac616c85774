#ifndef DRINMOD_FQ_HPP
#define DRINMOD_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinmod {

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// The finite field F_q, q = p^m a prime power, with table-driven arithmetic.
///
/// Elements are integer codes in [0, q). For m > 1 the code sum(c_i p^i)
/// stands for the residue sum(c_i w^i) modulo the canonical irreducible
/// polynomial of degree m over F_p, where the canonical choice is the monic
/// irreducible x^m + sum(c_i x^i) whose code integer sum(c_i p^i) is
/// smallest. (For q = 4 this picks x^2 + x + 1.) Prime fields are plain
/// residues mod p.
///
/// Instances are interned: Fq::make(q) returns the same object for equal q,
/// so pointer equality is ring compatibility. All state is immutable after
/// construction; sharing across threads is safe.
class Fq {
 public:
  /// Largest supported q. Table size grows as q^2; this cap keeps the
  /// footprint small while leaving ample room above the spec floor of 16.
  static constexpr unsigned kMaxQ = 512;

  static FqPtr make(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return m_; }
  bool is_prime_field() const { return m_ == 1; }

  /// Coefficients c_0..c_{m-1} of the canonical modulus x^m + ... + c_0
  /// (empty for prime fields).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  uint32_t from_int(long long v) const;

  /// The smallest code that generates the multiplicative group.
  uint32_t generator() const { return generator_; }

  /// "0", "3", "w", "w^2+w+1", ... (prime fields print decimal residues).
  std::string to_string(uint32_t a) const;
  /// Inverse of to_string; also accepts plain integers for any q.
  uint32_t from_string(const std::string& s) const;

 private:
  explicit Fq(unsigned q);

  unsigned q_, p_, m_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> add_, mul_;
  std::vector<uint32_t> neg_, inv_;
  uint32_t generator_ = 1;
};

}  // namespace drinmod

#endif
