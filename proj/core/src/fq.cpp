#include "drinmod/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace drinmod {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Decompose q = p^m with p prime; returns false if q is not a prime power.
bool prime_power(unsigned q, unsigned& p, unsigned& m) {
  if (q < 2) return false;
  unsigned base = q;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  if (!is_prime(base)) return false;
  unsigned v = q, deg = 0;
  while (v % base == 0) {
    v /= base;
    ++deg;
  }
  if (v != 1) return false;
  p = base;
  m = deg;
  return true;
}

// Dense polynomials over F_p, coefficients in [0, p), used only to
// bootstrap the tables. Leading zeros trimmed.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  ptrim(r);
  return r;
}

// a mod b, b monic-izable (leading coefficient invertible mod p).
PPoly pmod(PPoly a, const PPoly& b, unsigned p) {
  ptrim(a);
  unsigned linv = 1;
  {
    uint32_t lb = b.back();
    for (unsigned x = 1; x < p; ++x)
      if (lb * x % p == 1) {
        linv = x;
        break;
      }
  }
  while (a.size() >= b.size()) {
    uint32_t c = a.back() * linv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint32_t s = b[i] * c % p;
      a[i + shift] = (a[i + shift] + p - s) % p;
    }
    ptrim(a);
  }
  return a;
}

bool pis_zero(const PPoly& a) { return a.empty(); }

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of `code`.
PPoly from_code(uint64_t code, unsigned d, unsigned p) {
  PPoly r(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    r[i] = static_cast<uint32_t>(code % p);
    code /= p;
  }
  r[d] = 1;
  return r;
}

bool divisible(const PPoly& a, const PPoly& b, unsigned p) {
  return pis_zero(pmod(a, b, p));
}

// Trial division by every monic polynomial of degree 1..deg(a)/2.
bool irreducible(const PPoly& a, unsigned p) {
  unsigned d = static_cast<unsigned>(a.size()) - 1;
  for (unsigned k = 1; 2 * k <= d; ++k) {
    uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code)
      if (divisible(a, from_code(code, k, p), p)) return false;
  }
  return true;
}

std::vector<unsigned> prime_factors(uint64_t n) {
  std::vector<unsigned> f;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(static_cast<unsigned>(n));
  return f;
}

}  // namespace

Fq::Fq(unsigned q) : q_(q) {
  if (!prime_power(q, p_, m_) || q > kMaxQ)
    throw std::invalid_argument("Fq: q = " + std::to_string(q) +
                                " is not a prime power in [2, " +
                                std::to_string(kMaxQ) + "]");

  // Canonical modulus: least code integer among monic irreducibles.
  PPoly mod;
  if (m_ > 1) {
    uint64_t count = 1;
    for (unsigned i = 0; i < m_; ++i) count *= p_;
    for (uint64_t code = 0; code < count; ++code) {
      PPoly cand = from_code(code, m_, p_);
      if (irreducible(cand, p_)) {
        mod = cand;
        break;
      }
    }
    modulus_.assign(mod.begin(), mod.end() - 1);
  }

  auto decode = [&](uint32_t a) {
    PPoly r;
    for (unsigned i = 0; i < m_; ++i) {
      r.push_back(a % p_);
      a /= p_;
    }
    ptrim(r);
    return r;
  };
  auto encode = [&](const PPoly& v) {
    uint32_t a = 0;
    for (size_t i = v.size(); i-- > 0;) a = a * p_ + v[i];
    return a;
  };

  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    PPoly pa = decode(a);
    PPoly na;
    na.resize(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) na[i] = (p_ - pa[i]) % p_;
    ptrim(na);
    neg_[a] = encode(na);
    for (uint32_t b = 0; b < q_; ++b) {
      PPoly pb = decode(b);
      PPoly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        uint32_t x = i < pa.size() ? pa[i] : 0;
        uint32_t y = i < pb.size() ? pb[i] : 0;
        s[i] = (x + y) % p_;
      }
      ptrim(s);
      add_[size_t(a) * q_ + b] = encode(s);
      PPoly pr = pmul(pa, pb, p_);
      if (m_ > 1) pr = pmod(pr, mod, p_);
      mul_[size_t(a) * q_ + b] = encode(pr);
    }
  }
  for (uint32_t a = 1; a < q_; ++a)
    for (uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }

  // Least multiplicative generator.
  auto factors = prime_factors(q_ - 1);
  for (uint32_t a = 1; a < q_; ++a) {
    bool gen = true;
    for (unsigned f : factors)
      if (pow(a, (q_ - 1) / f) == 1) {
        gen = false;
        break;
      }
    if (gen) {
      generator_ = a;
      break;
    }
  }
}

FqPtr Fq::make(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, FqPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  FqPtr f(new Fq(q));
  cache.emplace(q, f);
  return f;
}

uint32_t Fq::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("Fq::inv: zero has no inverse");
  return inv_[a];
}

uint32_t Fq::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Fq::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

std::string Fq::to_string(uint32_t a) const {
  if (a >= q_) throw std::invalid_argument("Fq::to_string: bad code");
  if (is_prime_field()) return std::to_string(a);
  if (a == 0) return "0";
  std::string s;
  for (unsigned i = m_; i-- > 0;) {
    uint32_t c = a;
    for (unsigned k = 0; k < i; ++k) c /= p_;
    c %= p_;
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "w" : "w^" + std::to_string(i);
    }
  }
  return s;
}

uint32_t Fq::from_string(const std::string& s) const {
  uint32_t acc = 0;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == s.size()) throw std::invalid_argument("Fq::from_string: empty");
  bool first = true;
  while (pos < s.size()) {
    skip_ws();
    if (!first) {
      if (s[pos] != '+')
        throw std::invalid_argument("Fq::from_string: expected '+' in '" + s + "'");
      ++pos;
      skip_ws();
    }
    first = false;
    // term: [int][*][w[^k]]
    uint64_t coef = 1;
    bool saw_num = false;
    if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
        coef = coef * 10 + (s[pos++] - '0');
      saw_num = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    unsigned wexp = 0;
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      wexp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        wexp = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
          wexp = wexp * 10 + (s[pos++] - '0');
      }
    } else if (!saw_num) {
      throw std::invalid_argument("Fq::from_string: bad term in '" + s + "'");
    }
    if (wexp >= m_ && !(wexp == 0))
      throw std::invalid_argument("Fq::from_string: exponent too large in '" + s + "'");
    uint32_t term = from_int(static_cast<long long>(coef % p_));
    if (wexp > 0) {
      uint32_t w = p_;  // code of the generator symbol w = x
      term = mul(term, pow(w, wexp));
    }
    acc = add(acc, term);
    skip_ws();
  }
  return acc;
}

}  // namespace drinmod
