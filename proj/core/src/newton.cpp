#include "drinmod/newton.hpp"

#include <numeric>
#include <stdexcept>

namespace drinmod {

Rat::Rat(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat NewtonPolygon::slope(size_t s) const {
  if (s + 1 >= vertices.size()) throw std::invalid_argument("NewtonPolygon: bad segment");
  return Rat(vertices[s + 1].second - vertices[s].second,
             vertices[s + 1].first - vertices[s].first);
}

NewtonPolygon newton_polygon(const UPoly<RingElem>& P) {
  if (P.is_zero())
    throw std::invalid_argument("newton_polygon: zero polynomial has no polygon");
  std::vector<std::pair<long long, long long>> pts;
  for (long i = 0; i <= P.degree(); ++i) {
    const RingElem& c = P.coeff(static_cast<size_t>(i));
    if (c.is_zero()) continue;
    pts.emplace_back(i, -static_cast<long long>(*c.deg_T()));
  }
  // Monotone-chain lower hull; collinear middle points are dropped so a
  // one-slope polygon really is a single segment.
  std::vector<std::pair<long long, long long>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b iff it turns strictly left of a->p (b below the chord)
      __int128 cross = static_cast<__int128>(b.first - a.first) * (p.second - a.second) -
                       static_cast<__int128>(b.second - a.second) * (p.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return NewtonPolygon{std::move(hull)};
}

std::vector<std::pair<Rat, long long>> root_valuations(const NewtonPolygon& np) {
  std::vector<std::pair<Rat, long long>> out;
  for (size_t s = 0; s + 1 < np.vertices.size(); ++s) {
    long long len = np.vertices[s + 1].first - np.vertices[s].first;
    out.emplace_back(-np.slope(s), len);
  }
  return out;
}

}  // namespace drinmod
