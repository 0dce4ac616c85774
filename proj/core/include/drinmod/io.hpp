#ifndef DRINMOD_IO_HPP
#define DRINMOD_IO_HPP

#include <string>

#include "drinmod/ring.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// Canonical text form: sum of terms "c*T^m*g1^e1*...*g{r-1}^e{r-1}" in the
/// canonical term order, e.g. "T^3*g1 + 2*T^-1 + 1". Extension-field
/// coefficients are parenthesized w-polynomials: "(w+1)*g2^3". Zero prints
/// as "0". serialize-parse-serialize is the identity.
std::string to_string(const RingElem& x);

/// Inverse of to_string for the given ring context.
RingElem parse_ring_elem(const std::string& s, const FqPtr& field, unsigned nvars);

/// One-line "a_0 + a_1*x + ..." rendering for univariate polynomials over
/// the ring, used in diagnostics and tests.
std::string to_string(const UPoly<RingElem>& p, const std::string& var = "x");

}  // namespace drinmod

#endif
