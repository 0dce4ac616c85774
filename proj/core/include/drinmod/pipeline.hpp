#ifndef DRINMOD_PIPELINE_HPP
#define DRINMOD_PIPELINE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/invariants.hpp"
#include "drinmod/isogeny.hpp"
#include "drinmod/ring.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// Phi_{J,H}(X) for H = (A/TA) (outgoing, s = 1) or (A/TA)^{r-1} (incoming,
/// s = r-1): monic of degree psi in X, coefficients a_0..a_psi in C' (no
/// negative T exponents, all passing membership_check_C).
struct ModularPolynomial {
  unsigned q = 0;
  unsigned r = 0;
  MonomialInvariant J;
  IsoType type = IsoType::outgoing;
  uint64_t psi = 0;
  unsigned s = 1;            // 1 or r-1
  long long w = 0;           // w_s(J)
  std::vector<RingElem> coeffs;  // a_0 .. a_psi
};

struct PipelineOptions {
  /// Assert C' membership and the Theorem degree relations; on for the
  /// generic module, off for specialized runs where C' makes no sense.
  bool check_membership = true;
  bool check_bounds = true;
  /// Assert that every lifted coefficient matrix commutes with M_v.
  bool assert_commute = true;
  std::function<void(const std::string&)> progress;
};

/// The full characteristic-polynomial pipeline over the module's own ring:
/// kernel polynomial -> reciprocal -> companion M_v -> adjugate inverse M_a
/// -> lifted coefficient recurrences -> M_J -> division-free charpoly,
/// with the Laurent denominators required to cancel by the end.
/// The module must be monic; J must match its (q, r).
ModularPolynomial run_pipeline(const DrinfeldModule<RingElem>& module,
                               const MonomialInvariant& J, IsoType type,
                               const PipelineOptions& opts = {});

/// run_pipeline on the monic generic module, all checks on.
ModularPolynomial compute_modpoly(const FqPtr& field, unsigned r,
                                  const MonomialInvariant& J, IsoType type,
                                  const PipelineOptions& opts = {});

/// Only a_{psi-1} = -Tr(M_J): the cheap pre-flight check. pass means the
/// trace cleared its Laurent denominators, lies in C' and respects the
/// weight bound.
struct TraceSanity {
  RingElem a_psi_minus_1;
  bool pass = false;
};
TraceSanity trace_sanity(const FqPtr& field, unsigned r,
                         const MonomialInvariant& J, IsoType type,
                         const PipelineOptions& opts = {});

/// Per-coefficient degree report for the Theorem bounds
///   deg_T a_0 = psi * w_s(J),   deg_T a_k <= (psi - k) * w_s(J).
struct TheoremRow {
  uint64_t k = 0;
  std::optional<long long> deg;  // nullopt for a zero coefficient
  long long bound = 0;
  bool sharp = false;
};
struct TheoremReport {
  std::vector<TheoremRow> rows;  // k = 0 .. psi
  long long height = 0;          // max deg_T over coefficients
  long long expected_height = 0; // psi * w_s(J)
  bool bounds_hold = false;
  bool height_ok = false;
  bool all_sharp = false;
};
TheoremReport verify_theorem(const ModularPolynomial& mp);

/// (i, deg_T(a_i), bound) rows in the paper's table layout.
std::vector<TheoremRow> degree_table(const ModularPolynomial& mp);

}  // namespace drinmod

#endif
