#ifndef DRINMOD_RING_HPP
#define DRINMOD_RING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drinmod/fq.hpp"

namespace drinmod {

/// Exponent vector of one term of F_q[T^{+-1}, g_1, ..., g_{r-1}]:
/// a signed T exponent (the ring is Laurent in T) and up to kMaxVars
/// unsigned g exponents. Unused slots stay zero.
struct Monomial {
  static constexpr unsigned kMaxVars = 7;

  int32_t t = 0;
  std::array<uint16_t, kMaxVars> g{};

  bool operator==(const Monomial&) const = default;

  unsigned total_gdeg() const {
    unsigned s = 0;
    for (auto e : g) s += e;
    return s;
  }

  uint64_t hash() const {
    uint64_t lo = (uint64_t(g[0]) << 48) | (uint64_t(g[1]) << 32) |
                  (uint64_t(g[2]) << 16) | uint64_t(g[3]);
    uint64_t hi = (uint64_t(g[4]) << 48) | (uint64_t(g[5]) << 32) |
                  (uint64_t(g[6]) << 16) | uint64_t(uint32_t(t) >> 16);
    uint64_t x = lo * 0x9e3779b97f4a7c15ULL;
    x ^= (hi + uint64_t(uint32_t(t))) * 0xc2b2ae3d27d4eb4fULL;
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return x;
  }
};

/// Canonical term order: descending total g-degree, then descending
/// lexicographic on (g_1, ..., g_{r-1}), then descending T exponent.
/// Serialization, iteration and equality all follow this order.
bool monomial_before(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  uint32_t c = 0;  // nonzero F_q code
};

/// Sparse exact element of R = F_q[T^{+-1}, g_1, ..., g_{r-1}].
///
/// Canonical form: terms sorted by monomial_before, no zero coefficients,
/// distinct monomials. A default-constructed element is the zero of an
/// unspecified ring; binary operations adopt the ring of the first operand
/// that has one, and mixing two distinct rings throws. Values are immutable
/// in practice (all operations return fresh elements) and safe to share
/// across threads.
class RingElem {
 public:
  RingElem() = default;

  static RingElem zero(const FqPtr& f, unsigned nvars);
  static RingElem constant(const FqPtr& f, unsigned nvars, uint32_t code);
  static RingElem one(const FqPtr& f, unsigned nvars) { return constant(f, nvars, 1); }
  /// c * T^t * g_1^{e_1} ... ; e may be shorter than nvars (rest zero).
  static RingElem monomial(const FqPtr& f, unsigned nvars, uint32_t code,
                           int32_t t, std::span<const uint16_t> e = {});
  static RingElem T_power(const FqPtr& f, unsigned nvars, int32_t k) {
    return monomial(f, nvars, 1, k);
  }
  /// The variable g_i, i in [1, nvars].
  static RingElem var(const FqPtr& f, unsigned nvars, unsigned i);

  const FqPtr& field() const { return field_; }
  unsigned q() const { return field_ ? field_->q() : 0; }
  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t nterms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

  RingElem scaled(uint32_t code) const;
  RingElem pow(uint64_t e) const;

  /// a^{q^k}: coefficients to the q^k-th power (a no-op on F_q), exponents
  /// multiplied by q^k. Equals q^k-fold self-multiplication.
  RingElem frobenius(unsigned k) const;

  /// Inverse of frobenius(1). Defined exactly when every exponent is a
  /// multiple of q (coefficients are their own q-th roots in F_q).
  RingElem qth_root() const;

  /// Largest T exponent, or nullopt for zero (the -infinity marker).
  std::optional<int32_t> deg_T() const;
  std::optional<int32_t> min_deg_T() const;
  bool has_negative_t() const;

  /// Inverse, defined exactly for the units of the Laurent ring:
  /// single terms c * T^k with no g part. Throws std::domain_error else.
  RingElem inv() const;
  bool is_unit() const;

  /// Ring homomorphism g_i -> images[i-1] (T -> T); the images fix the
  /// target ring, which must share the field. Precondition: images cover
  /// every g_i occurring in *this.
  RingElem substitute(std::span<const RingElem> images) const;

  /// Assembles an element from (possibly unsorted, repeated) terms.
  static RingElem from_terms(const FqPtr& f, unsigned nvars, std::vector<Term> ts);

 private:
  friend class MulAccumulator;
  void check_compat(const RingElem& o) const;

  FqPtr field_;
  uint16_t nvars_ = 0;
  std::vector<Term> terms_;
};

inline RingElem frob(const RingElem& a, unsigned k) { return a.frobenius(k); }
inline RingElem qth_root(const RingElem& a) { return a.qth_root(); }

}  // namespace drinmod

#endif
