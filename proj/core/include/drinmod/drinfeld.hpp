#ifndef DRINMOD_DRINFELD_HPP
#define DRINMOD_DRINFELD_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "drinmod/ring.hpp"
#include "drinmod/skew.hpp"

namespace drinmod {

/// A rank-r Drinfeld module over a coefficient ring R, stored through its
/// defining twisted polynomial phi_T = gamma_T + g_1 tau + ... + delta tau^r.
/// Conventions g_0 = gamma_T, g_r = delta are exposed via coeff().
template <class R>
struct DrinfeldModule {
  unsigned q = 0;
  unsigned r = 0;
  R gamma_T;
  std::vector<R> g;  // g_1 .. g_{r-1}
  R delta;

  DrinfeldModule() = default;
  DrinfeldModule(unsigned q_, unsigned r_, R gamma, std::vector<R> gs, R del)
      : q(q_), r(r_), gamma_T(std::move(gamma)), g(std::move(gs)), delta(std::move(del)) {
    if (r < 2) throw std::invalid_argument("DrinfeldModule: rank must be >= 2");
    if (g.size() != r - 1)
      throw std::invalid_argument("DrinfeldModule: expected r-1 middle coefficients");
    if (delta.is_zero()) throw std::invalid_argument("DrinfeldModule: delta must be nonzero");
  }

  const R& coeff(unsigned k) const {
    if (k == 0) return gamma_T;
    if (k == r) return delta;
    if (k < r) return g[k - 1];
    throw std::invalid_argument("DrinfeldModule::coeff: index out of range");
  }

  bool is_monic() const { return delta.is_one(); }

  SkewPoly<R> to_skew() const {
    std::vector<R> c;
    c.reserve(r + 1);
    c.push_back(gamma_T);
    for (const R& x : g) c.push_back(x);
    c.push_back(delta);
    return SkewPoly<R>(std::move(c));
  }
};

/// The monic generic module over F_q(T, g_1, ..., g_{r-1}):
/// phi_T(X) = T X + g_1 X^q + ... + g_{r-1} X^{q^{r-1}} + X^{q^r}.
inline DrinfeldModule<RingElem> monic_generic(const FqPtr& f, unsigned r) {
  if (r < 2) throw std::invalid_argument("monic_generic: rank must be >= 2");
  unsigned nv = r - 1;
  std::vector<RingElem> gs;
  for (unsigned i = 1; i < r; ++i) gs.push_back(RingElem::var(f, nv, i));
  return DrinfeldModule<RingElem>(f->q(), r, RingElem::T_power(f, nv, 1),
                                  std::move(gs), RingElem::one(f, nv));
}

/// The isomorphic module c phi c^{-1}: coefficient k becomes l_k c^{1-q^k}.
template <class R>
DrinfeldModule<R> conjugate(const DrinfeldModule<R>& m, const R& c) {
  auto scale = [&](const R& x, unsigned k) {
    // c^{1-q^k} = c * (c^{q^k})^{-1}
    return x * c * frob(c, k).inv();
  };
  std::vector<R> gs;
  for (unsigned k = 1; k < m.r; ++k) gs.push_back(scale(m.g[k - 1], k));
  return DrinfeldModule<R>(m.q, m.r, m.gamma_T, std::move(gs), scale(m.delta, m.r));
}

}  // namespace drinmod

#endif
