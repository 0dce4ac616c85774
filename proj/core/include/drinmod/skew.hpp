#ifndef DRINMOD_SKEW_HPP
#define DRINMOD_SKEW_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "drinmod/upoly.hpp"

namespace drinmod {

/// Twisted polynomial sum c_i tau^i with tau c = c^q tau, i.e. the additive
/// polynomial sum c_i X^{q^i}. Multiplication is composition of additive
/// maps: (f*g)(X) = f(g(X)). The coefficient ring must provide the free
/// function frob(x, k) = x^{q^k} (found by ADL) besides the UPoly ring ops.
template <class R>
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& coeff(size_t i) const {
    static const R zero{};
    return i < c_.size() ? c_[i] : zero;
  }

  SkewPoly operator+(const SkewPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return SkewPoly(std::move(r));
  }
  SkewPoly operator-(const SkewPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return SkewPoly(std::move(r));
  }
  bool operator==(const SkewPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<R> c_;
};

/// Coefficient of tau^k in f*g is sum over i+j=k of f_i * g_j^{q^i}.
template <class R>
SkewPoly<R> skew_mul(const SkewPoly<R>& f, const SkewPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<R> r(f.coeffs().size() + g.coeffs().size() - 1);
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (size_t j = 0; j < g.coeffs().size(); ++j) {
      if (g.coeffs()[j].is_zero()) continue;
      r[i + j] = r[i + j] + f.coeffs()[i] * frob(g.coeffs()[j], static_cast<unsigned>(i));
    }
  }
  return SkewPoly<R>(std::move(r));
}

/// f = quotient * g + remainder with deg(remainder) < deg(g). Requires an
/// invertible leading coefficient: the twisted rule puts frob(lead(g), d-e)
/// under the inverse.
template <class R>
std::pair<SkewPoly<R>, SkewPoly<R>> skew_right_divmod(const SkewPoly<R>& f,
                                                      const SkewPoly<R>& g) {
  if (g.is_zero()) throw std::invalid_argument("skew_right_divmod: division by zero");
  std::vector<R> rem = f.coeffs();
  long dg = g.degree();
  long df = static_cast<long>(rem.size()) - 1;
  if (df < dg) return {SkewPoly<R>{}, f};
  std::vector<R> quot(df - dg + 1);
  for (long k = df; k >= dg; --k) {
    if (rem[k].is_zero()) continue;
    unsigned shift = static_cast<unsigned>(k - dg);
    R lead = frob(g.coeffs()[dg], shift);
    R c = rem[k] * lead.inv();
    quot[shift] = c;
    for (long j = 0; j <= dg; ++j)
      rem[j + shift] = rem[j + shift] - c * frob(g.coeffs()[j], shift);
  }
  return {SkewPoly<R>(std::move(quot)), SkewPoly<R>(std::move(rem))};
}

/// The additive polynomial sum c_i X^{q^i} as an ordinary polynomial.
template <class R>
UPoly<R> to_additive(const SkewPoly<R>& f, unsigned q) {
  if (f.is_zero()) return {};
  std::vector<R> dense;
  uint64_t e = 1;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (e > (uint64_t(1) << 24))
      throw std::invalid_argument("to_additive: degree q^d too large to expand");
    if (dense.size() < e + 1) dense.resize(e + 1);
    dense[e] = f.coeffs()[i];
    e *= q;
  }
  return UPoly<R>(std::move(dense));
}

/// Inverse of to_additive; throws if a coefficient sits off the q-power
/// exponents.
template <class R>
SkewPoly<R> from_additive(const UPoly<R>& p, unsigned q) {
  std::vector<R> out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    // test whether i is a power of q times 1 starting at q^0 = 1
    uint64_t v = 1;
    unsigned k = 0;
    while (v < i) {
      v *= q;
      ++k;
    }
    if (v != i || i == 0)
      throw std::invalid_argument("from_additive: exponent is not a power of q");
    if (out.size() < k + 1) out.resize(k + 1);
    out[k] = p.coeffs()[i];
  }
  return SkewPoly<R>(std::move(out));
}

}  // namespace drinmod

#endif
