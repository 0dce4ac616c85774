#ifndef DRINMOD_ISOGENY_HPP
#define DRINMOD_ISOGENY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/fq.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// The two stated forms of the T-isogeny classification. prop21 normalizes
/// the isogeny as f = X + a X^q, prop22 as f = a^{-1} X + X^q; the second
/// keeps the isogenous module monic and is the one the pipeline uses.
enum class Normalization { prop21, prop22 };

enum class IsoType { outgoing, incoming };

inline const char* to_string(IsoType t) {
  return t == IsoType::outgoing ? "outgoing" : "incoming";
}

/// sum of q^j for j in [lo, hi) = (q^hi - q^lo)/(q - 1).
uint64_t geom_sum(unsigned q, unsigned lo, unsigned hi);

/// Q(x) = sum_{i=0}^r (-1)^i g_{r-i} x^{(q^r - q^{r-i})/(q-1)}, whose roots
/// parametrize the outgoing T-isogenies. Degree psi_r, constant term delta,
/// leading coefficient (-1)^r gamma_T.
template <class R>
UPoly<R> build_Q(const DrinfeldModule<R>& m) {
  std::vector<R> c(geom_sum(m.q, 0, m.r) + 1);
  for (unsigned i = 0; i <= m.r; ++i) {
    uint64_t e = geom_sum(m.q, m.r - i, m.r);
    R v = m.coeff(m.r - i);
    c[e] = (i % 2 == 1) ? -v : v;
  }
  return UPoly<R>(std::move(c));
}

/// Q~(x) with exponents (q^i - 1)/(q - 1). prop21 puts g_{r-i}^{q^i} on the
/// coefficients; prop22 uses g_{r-i}^{q^{i-1}}, whose i = 0 term is the q-th
/// root of delta and therefore requires a monic module.
template <class R>
UPoly<R> build_Qtilde(const DrinfeldModule<R>& m, Normalization norm) {
  std::vector<R> c(geom_sum(m.q, 0, m.r) + 1);
  for (unsigned i = 0; i <= m.r; ++i) {
    uint64_t e = geom_sum(m.q, 0, i);
    R v;
    if (norm == Normalization::prop21) {
      v = frob(m.coeff(m.r - i), i);
    } else if (i == 0) {
      if (!m.delta.is_one())
        throw std::invalid_argument(
            "build_Qtilde(prop22): constant term delta^{1/q} requires delta = 1");
      v = m.delta;
    } else {
      v = frob(m.coeff(m.r - i), i - 1);
    }
    c[e] = (i % 2 == 1) ? -v : v;
  }
  return UPoly<R>(std::move(c));
}

/// Target module of the outgoing isogeny attached to a root a of Q:
///   prop21:  g~_k = g_k + a g_{k-1}^q - a^{q^{k-1}} g~_{k-1},  D~ = a^{1-q^r} D^q
///   prop22:  g~_k = a^{q^k} (a^{-1} g_k + g_{k-1}^q - g~_{k-1}),  D~ = D^q
/// with g_0 = g~_0 = gamma_T.
template <class R>
DrinfeldModule<R> outgoing_target(const DrinfeldModule<R>& m, const R& a,
                                  Normalization norm) {
  std::vector<R> gt;  // g~_1 .. g~_{r-1}
  R prev = m.gamma_T;
  for (unsigned k = 1; k < m.r; ++k) {
    R cur;
    if (norm == Normalization::prop21) {
      cur = m.coeff(k) + a * frob(m.coeff(k - 1), 1) - frob(a, k - 1) * prev;
    } else {
      cur = frob(a, k) * (a.inv() * m.coeff(k) + frob(m.coeff(k - 1), 1) - prev);
    }
    gt.push_back(cur);
    prev = cur;
  }
  R delta_t = (norm == Normalization::prop21)
                  ? a * frob(a, m.r).inv() * frob(m.delta, 1)
                  : frob(m.delta, 1);
  return DrinfeldModule<R>(m.q, m.r, m.gamma_T, std::move(gt), std::move(delta_t));
}

/// Source module of the incoming isogeny attached to a root a of Q~:
///   prop21:  g~_k = g_k + a^{q^{k-1}} g_{k-1} - a g~_{k-1}^q,  D~^q = a^{q^r-1} D
///   prop22:  g~_k = a (g_{k-1} - g~_{k-1}^q) + a^{1-q^k} g_k,  D~^q = D
/// The q-th root for D~ must exist in R (qth_root is total on finite fields
/// and defined on RingElems exactly when all exponents divide by q).
template <class R>
DrinfeldModule<R> incoming_source(const DrinfeldModule<R>& m, const R& a,
                                  Normalization norm) {
  std::vector<R> gt;
  R prev = m.gamma_T;
  for (unsigned k = 1; k < m.r; ++k) {
    R cur;
    if (norm == Normalization::prop21) {
      cur = m.coeff(k) + frob(a, k - 1) * m.coeff(k - 1) - a * frob(prev, 1);
    } else {
      cur = a * (m.coeff(k - 1) - frob(prev, 1)) + a * frob(a, k).inv() * m.coeff(k);
    }
    gt.push_back(cur);
    prev = cur;
  }
  R delta_q = (norm == Normalization::prop21) ? frob(a, m.r) * a.inv() * m.delta
                                              : m.delta;
  R delta_t = delta_q.is_one() ? delta_q : qth_root(delta_q);
  return DrinfeldModule<R>(m.q, m.r, m.gamma_T, std::move(gt), std::move(delta_t));
}

/// Dual-isogeny coefficients b_0..b_kmax (default r-1), closed form:
///   outgoing: b_k = sum_i (-1)^i g_{k-i} a^{(q^k - q^{k-i})/(q-1)}
///   incoming: b_k = sum_i (-1)^i g_{k-i}^{q^i} a^{(q^i - 1)/(q-1)}
/// Extending to k = r gives exactly Q(a) resp. Q~_{prop21}(a), which is why
/// the duals exist precisely over the roots.
template <class R>
std::vector<R> dual_coeffs(const DrinfeldModule<R>& m, const R& a, IsoType dir,
                           unsigned kmax) {
  if (kmax > m.r) throw std::invalid_argument("dual_coeffs: k beyond rank");
  std::vector<R> b;
  for (unsigned k = 0; k <= kmax; ++k) {
    R acc;
    for (unsigned i = 0; i <= k; ++i) {
      R term;
      if (dir == IsoType::outgoing)
        term = m.coeff(k - i) * a.pow(geom_sum(m.q, k - i, k));
      else
        term = frob(m.coeff(k - i), i) * a.pow(geom_sum(m.q, 0, i));
      acc = (i % 2 == 1) ? acc - term : acc + term;
    }
    b.push_back(acc);
  }
  return b;
}

template <class R>
std::vector<R> dual_coeffs(const DrinfeldModule<R>& m, const R& a, IsoType dir) {
  return dual_coeffs(m, a, dir, m.r - 1);
}

/// Checks f-hat o f = phi_T (outgoing) or f o f-hat = phi_T (incoming)
/// identically in the quotient ring R[a]/(Q(a)) (resp. Q~ in the prop21
/// normalization) for the monic generic module. False means a bug, not a
/// bad input.
bool verify_dual_identity(const FqPtr& field, unsigned r, IsoType dir);

}  // namespace drinmod

#endif
