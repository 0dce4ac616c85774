#ifndef DRINMOD_NEWTON_HPP
#define DRINMOD_NEWTON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drinmod/ring.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// Exact rational number; slopes like (q-1)/(q^r-1) must compare exactly,
/// so no floating point anywhere near the polygons.
struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) = 1

  Rat() = default;
  Rat(long long n, long long d);
  static Rat integer(long long n) { return Rat(n, 1); }

  bool operator==(const Rat&) const = default;
  Rat operator-() const { return Rat(-num, den); }
  std::string str() const;
};

/// Lower convex hull of {(i, v(c_i)) : c_i != 0} with v = -deg_T.
/// Vertices are strictly increasing in exponent with strictly increasing
/// slopes between consecutive segments.
struct NewtonPolygon {
  std::vector<std::pair<long long, long long>> vertices;  // (exponent, valuation)

  size_t segments() const { return vertices.size() - 1; }
  Rat slope(size_t s) const;
};

/// Throws std::invalid_argument on the zero polynomial.
NewtonPolygon newton_polygon(const UPoly<RingElem>& P);

/// Negated slopes with horizontal lengths as multiplicities: the valuations
/// of the roots of P in any splitting field, counted with multiplicity.
std::vector<std::pair<Rat, long long>> root_valuations(const NewtonPolygon& np);

}  // namespace drinmod

#endif
