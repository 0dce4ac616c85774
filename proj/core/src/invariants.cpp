#include "drinmod/invariants.hpp"

#include <stdexcept>

#include "drinmod/error.hpp"

namespace drinmod {

namespace {

uint64_t upow(uint64_t b, unsigned e) {
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw std::overflow_error("q^r overflows");
    r *= b;
  }
  return r;
}

}  // namespace

uint64_t psi_r(unsigned q, unsigned r) {
  if (q < 2 || r < 2) throw std::invalid_argument("psi_r: need q >= 2, r >= 2");
  return (upow(q, r) - 1) / (q - 1);
}

std::string MonomialInvariant::label() const {
  std::string s = "J_{";
  for (unsigned v : e) s += std::to_string(v);
  s += "}";
  return s;
}

MonomialInvariant invariant_make(unsigned q, unsigned r,
                                 const std::vector<unsigned>& e, uint64_t e_r) {
  if (q < 2 || r < 2) throw std::invalid_argument("invariant_make: need q >= 2, r >= 2");
  if (e.size() != r - 1)
    throw std::invalid_argument("invariant_make: expected r-1 exponents, got " +
                                std::to_string(e.size()));
  uint64_t lhs = 0;
  for (unsigned i = 1; i < r; ++i) lhs += uint64_t(e[i - 1]) * (upow(q, i) - 1);
  uint64_t mod = upow(q, r) - 1;
  uint64_t rhs = e_r * mod;
  if (lhs != rhs)
    throw std::invalid_argument(
        "invariant_make: grading sum e_i(q^i-1) = " + std::to_string(lhs) +
        " != e_r(q^r-1) = " + std::to_string(rhs) +
        " (residue mod q^r-1: " + std::to_string(lhs % mod) + ")");
  return MonomialInvariant{q, r, e, e_r};
}

MonomialInvariant invariant_infer(unsigned q, unsigned r,
                                  const std::vector<unsigned>& e) {
  if (q < 2 || r < 2) throw std::invalid_argument("invariant_infer: need q >= 2, r >= 2");
  if (e.size() != r - 1)
    throw std::invalid_argument("invariant_infer: expected r-1 exponents, got " +
                                std::to_string(e.size()));
  uint64_t lhs = 0;
  for (unsigned i = 1; i < r; ++i) lhs += uint64_t(e[i - 1]) * (upow(q, i) - 1);
  uint64_t mod = upow(q, r) - 1;
  if (lhs % mod != 0)
    throw std::invalid_argument(
        "invariant_infer: sum e_i(q^i-1) = " + std::to_string(lhs) +
        " is not a multiple of q^r-1 = " + std::to_string(mod) +
        " (residue " + std::to_string(lhs % mod) + ")");
  return MonomialInvariant{q, r, e, lhs / mod};
}

long long weight(const MonomialInvariant& J, unsigned s) {
  long long se = 0;
  for (unsigned v : J.e) se += v;
  if (s == 1) return static_cast<long long>(J.q) * (se - static_cast<long long>(J.e_r));
  if (s == J.r - 1) {
    long long qr = 1, qrm1 = 1;
    for (unsigned i = 0; i < J.r; ++i) qr *= J.q;
    for (unsigned i = 0; i + 1 < J.r; ++i) qrm1 *= J.q;
    return se + static_cast<long long>(J.e_r) * (qr - qrm1 - 1);
  }
  throw std::invalid_argument("weight: s must be 1 or r-1");
}

bool membership_check_C(const RingElem& x) {
  if (x.is_zero()) return true;
  if (x.has_negative_t())
    throw fault("membership_check_C",
                "element has a negative T exponent; a Laurent denominator "
                "survived where C' membership was expected");
  unsigned q = x.q();
  unsigned r = x.nvars() + 1;
  uint64_t mod = upow(q, r) - 1;
  for (const Term& t : x.terms()) {
    uint64_t s = 0;
    for (unsigned i = 1; i < r; ++i) s += uint64_t(t.m.g[i - 1]) * (upow(q, i) - 1);
    if (s % mod != 0) return false;
  }
  return true;
}

}  // namespace drinmod
