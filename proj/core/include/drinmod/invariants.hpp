#ifndef DRINMOD_INVARIANTS_HPP
#define DRINMOD_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/ring.hpp"

namespace drinmod {

/// psi_r(T) = (q^r - 1)/(q - 1), the number of T-isogenies of either type
/// and the X-degree of the modular polynomials.
uint64_t psi_r(unsigned q, unsigned r);

/// A monomial isomorphism invariant J = g_1^{e_1} ... g_{r-1}^{e_{r-1}} Delta^{-e_r},
/// subject to the grading sum e_i (q^i - 1) = e_r (q^r - 1).
struct MonomialInvariant {
  unsigned q = 0;
  unsigned r = 0;
  std::vector<unsigned> e;  // e_1 .. e_{r-1}
  uint64_t e_r = 0;

  /// "J_{12}"-style label used in reports: concatenated e digits.
  std::string label() const;
};

/// Validates the grading condition; the error message carries the residue
/// of sum e_i (q^i - 1) modulo q^r - 1 to make rejections actionable.
MonomialInvariant invariant_make(unsigned q, unsigned r,
                                 const std::vector<unsigned>& e, uint64_t e_r);

/// Same, with e_r inferred as sum e_i (q^i - 1) / (q^r - 1); rejects
/// non-integral quotients. This is the CLI entry point for `--J e1,e2,...`.
MonomialInvariant invariant_infer(unsigned q, unsigned r,
                                  const std::vector<unsigned>& e);

/// w_1(J) = q (sum e_i - e_r);  w_{r-1}(J) = sum e_i + e_r (q^r - q^{r-1} - 1).
/// s must be 1 or r-1.
long long weight(const MonomialInvariant& J, unsigned s);

/// J evaluated at a module: l_1^{e_1} ... l_{r-1}^{e_{r-1}} * delta^{-e_r}.
/// delta must be invertible (trivially so for monic modules).
template <class R>
R evaluate_J(const MonomialInvariant& J, const DrinfeldModule<R>& m) {
  if (J.r != m.r) throw std::invalid_argument("evaluate_J: rank mismatch");
  R acc;
  bool found = false;
  for (unsigned i = 0; i < J.e.size(); ++i) {
    if (J.e[i] == 0) continue;
    R p = m.g[i].pow(J.e[i]);
    acc = found ? acc * p : p;
    found = true;
  }
  if (J.e_r > 0 && !m.delta.is_one()) {
    R d = m.delta.inv().pow(J.e_r);
    acc = found ? acc * d : d;
    found = true;
  }
  if (!found) {
    // J = 1 (all exponents zero, or delta = 1 absorbing e_r)
    return m.delta.pow(0);
  }
  return acc;
}

/// True iff every term's g-exponent vector satisfies
/// sum e_i (q^i - 1) == 0 mod (q^r - 1), the defining condition of C'.
/// A negative T exponent signals a broken pipeline state and throws fault.
bool membership_check_C(const RingElem& x);

}  // namespace drinmod

#endif
