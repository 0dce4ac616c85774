#ifndef DRINMOD_ORACLE_HPP
#define DRINMOD_ORACLE_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/ffield.hpp"
#include "drinmod/pipeline.hpp"
#include "drinmod/skew.hpp"

namespace drinmod {

/// Raised when the splitting field of phi_T would exceed q^12 elements;
/// callers resample the module instead of building huge towers.
class splitting_cap_exceeded : public std::runtime_error {
 public:
  explicit splitting_cap_exceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// The T-torsion of a concrete module over F_{q^n}: the q^r roots of
/// phi_T(X) inside the splitting extension, with an F_q-basis of the root
/// space and the module's coefficients embedded there.
struct TorsionSpace {
  ExtFieldPtr base_field;   // the module's field F_{q^n}
  ExtFieldPtr splitting;    // F_{q^{n m}} containing all roots
  DrinfeldModule<ExtElem> module;  // coefficients in the splitting field
  std::vector<ExtElem> basis;      // r roots forming an F_q-basis of phi[T]
};

/// Builds the torsion space; theta = gamma_T must be nonzero so phi_T is
/// separable. Throws splitting_cap_exceeded past q^12 elements.
TorsionSpace torsion_basis(const DrinfeldModule<ExtElem>& m);

/// All s-dimensional F_q-subspaces of the root space, each listed as its
/// full element set (q^s roots, zero included). s must be 1 or r-1; the
/// count is psi_r for both.
std::vector<std::vector<ExtElem>> subspaces(const TorsionSpace& ts, unsigned s);

struct IsogenyWitness {
  SkewPoly<ExtElem> kernel_poly;        // f(X) = prod_{w in W} (X - w)
  DrinfeldModule<ExtElem> target;       // phi~ with f o phi_T = phi~_T o f
};

/// One isogeny per s-dimensional subspace W: the kernel polynomial as a
/// skew polynomial and the isogenous module solved from the defining
/// relation by exact right division (a nonzero remainder is a fault).
std::vector<IsogenyWitness> enumerate_isogenies(const TorsionSpace& ts, unsigned s);

struct OracleReport {
  bool pass = false;
  uint64_t psi = 0;
  std::vector<std::string> mismatches;
};

/// Ground-truth check of a computed modular polynomial at a concrete monic
/// module: specializes every coefficient (T -> theta, g_i -> module
/// coefficients) and compares, coefficient by coefficient, with
/// prod(X - J(phi~)) over the enumerated isogenies of the matching type.
OracleReport cross_check(const ModularPolynomial& mp,
                         const DrinfeldModule<ExtElem>& specialized);

/// Uniformly random monic module over F_{q^n} with theta != 0.
DrinfeldModule<ExtElem> sample_monic_module(const FqPtr& fq, unsigned r,
                                            unsigned n, std::mt19937_64& rng);

}  // namespace drinmod

#endif
