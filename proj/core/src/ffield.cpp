#include "drinmod/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace drinmod {

namespace {

// Dense polynomial helpers over the tabled base field (codes in [0, q)).
using BPoly = std::vector<uint32_t>;

void btrim(BPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BPoly bmul(const Fq& f, const BPoly& a, const BPoly& b) {
  if (a.empty() || b.empty()) return {};
  BPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  btrim(r);
  return r;
}

BPoly bmod(const Fq& f, BPoly a, const BPoly& b) {
  btrim(a);
  uint32_t linv = f.inv(b.back());
  while (a.size() >= b.size()) {
    uint32_t c = f.mul(a.back(), linv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = f.sub(a[i + shift], f.mul(b[i], c));
    btrim(a);
  }
  return a;
}

// Extended Euclid: returns g = gcd(a, b) monic along with s with
// s*a = g mod b' bookkeeping reduced to what inversion needs.
BPoly binv_mod(const Fq& f, BPoly a, const BPoly& m) {
  // invert a modulo m via iterative extended gcd
  BPoly r0 = m, r1 = bmod(f, std::move(a), m);
  BPoly s0 = {}, s1 = {1};
  if (r1.empty()) throw std::domain_error("ExtElem::inv: zero has no inverse");
  while (!r1.empty()) {
    // divide r0 by r1
    BPoly q;
    BPoly rem = r0;
    uint32_t linv = f.inv(r1.back());
    if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint32_t c = f.mul(rem.back(), linv);
      size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[i + shift] = f.sub(rem[i + shift], f.mul(r1[i], c));
      btrim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    BPoly qs = bmul(f, q, s1);
    BPoly ns(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < ns.size(); ++i) {
      uint32_t x = i < s0.size() ? s0[i] : 0;
      uint32_t y = i < qs.size() ? qs[i] : 0;
      ns[i] = f.sub(x, y);
    }
    btrim(ns);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  if (r0.size() != 1)
    throw std::domain_error("ExtElem::inv: element not invertible (gcd not constant)");
  uint32_t scale = f.inv(r0[0]);
  for (uint32_t& c : s0) c = f.mul(c, scale);
  return bmod(f, std::move(s0), m);
}

bool bdivisible(const Fq& f, const BPoly& a, const BPoly& b) {
  return bmod(f, a, b).empty();
}

BPoly monic_from_code(uint64_t code, unsigned d, unsigned q) {
  BPoly r(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    r[i] = static_cast<uint32_t>(code % q);
    code /= q;
  }
  r[d] = 1;
  return r;
}

bool birreducible(const Fq& f, const BPoly& a) {
  unsigned d = static_cast<unsigned>(a.size()) - 1;
  unsigned q = f.q();
  for (unsigned k = 1; 2 * k <= d; ++k) {
    uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code)
      if (bdivisible(f, a, monic_from_code(code, k, q))) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ExtField::ExtField(FqPtr base, unsigned degree) : base_(std::move(base)), d_(degree) {
  if (d_ < 1 || d_ > 24) throw std::invalid_argument("ExtField: degree out of range");
  order_ = 1;
  for (unsigned i = 0; i < d_; ++i) {
    if (order_ > UINT64_MAX / q()) throw std::overflow_error("ExtField: order overflow");
    order_ *= q();
  }
  const Fq& f = *base_;
  uint64_t count = 1;
  for (unsigned i = 0; i < d_; ++i) count *= q();
  for (uint64_t code = 0; code < count; ++code) {
    BPoly cand = monic_from_code(code, d_, q());
    if (birreducible(f, cand)) {
      mod_.assign(cand.begin(), cand.end() - 1);
      break;
    }
  }
}

ExtFieldPtr ExtField::make(const FqPtr& base, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, ExtFieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(base->q(), degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ExtFieldPtr f(new ExtField(base, degree));
  cache.emplace(key, f);
  return f;
}

ExtElem ExtField::zero() const {
  return ExtElem(shared_from_this(), std::vector<uint32_t>(d_, 0));
}

ExtElem ExtField::one() const { return from_base(1); }

ExtElem ExtField::from_base(uint32_t code) const {
  if (code >= q()) throw std::invalid_argument("ExtField::from_base: bad code");
  std::vector<uint32_t> v(d_, 0);
  v[0] = code;
  return ExtElem(shared_from_this(), std::move(v));
}

ExtElem ExtField::gen() const {
  std::vector<uint32_t> v(d_, 0);
  if (d_ == 1) {
    // modulus is x, so the class of x is 0; fall back to the base generator
    v[0] = base_->generator();
  } else {
    v[1] = 1;
  }
  return ExtElem(shared_from_this(), std::move(v));
}

ExtElem ExtField::from_code(uint64_t code) const {
  std::vector<uint32_t> v(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    v[i] = static_cast<uint32_t>(code % q());
    code /= q();
  }
  return ExtElem(shared_from_this(), std::move(v));
}

uint64_t ExtField::to_code(const ExtElem& x) const {
  uint64_t code = 0;
  for (unsigned i = d_; i-- > 0;) code = code * q() + x.coords()[i];
  return code;
}

ExtElem ExtField::multiplicative_generator() const {
  uint64_t cached = gen_code_.load();
  if (cached != 0) return from_code(cached);
  auto factors = prime_factors64(order_ - 1);
  for (uint64_t code = 1; code < order_; ++code) {
    ExtElem z = from_code(code);
    bool ok = true;
    for (uint64_t f : factors)
      if (z.pow((order_ - 1) / f).is_one()) {
        ok = false;
        break;
      }
    if (ok) {
      gen_code_.store(code);
      return z;
    }
  }
  throw std::logic_error("ExtField: no multiplicative generator found");
}

ExtElem::ExtElem(ExtFieldPtr f, std::vector<uint32_t> v) : f_(std::move(f)), v_(std::move(v)) {
  if (v_.size() != f_->degree())
    throw std::invalid_argument("ExtElem: coordinate length mismatch");
}

bool ExtElem::is_zero() const {
  for (uint32_t c : v_)
    if (c != 0) return false;
  return true;
}

bool ExtElem::is_one() const {
  if (!f_) return false;
  if (v_[0] != 1) return false;
  for (size_t i = 1; i < v_.size(); ++i)
    if (v_[i] != 0) return false;
  return true;
}

namespace {
const ExtFieldPtr& resolve_field(const ExtElem& a, const ExtElem& b) {
  if (a.field() && b.field() && a.field() != b.field())
    throw std::invalid_argument("ExtElem: mixed fields");
  return a.field() ? a.field() : b.field();
}
}  // namespace

ExtElem ExtElem::operator+(const ExtElem& o) const {
  const ExtFieldPtr& f = resolve_field(*this, o);
  if (!f) return {};
  if (!f_) return o;
  if (!o.f_) return *this;
  const Fq& base = *f->base();
  std::vector<uint32_t> v(v_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = base.add(v_[i], o.v_[i]);
  return ExtElem(f, std::move(v));
}

ExtElem ExtElem::operator-() const {
  if (!f_) return {};
  const Fq& base = *f_->base();
  std::vector<uint32_t> v(v_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = base.neg(v_[i]);
  return ExtElem(f_, std::move(v));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator*(const ExtElem& o) const {
  const ExtFieldPtr& f = resolve_field(*this, o);
  if (!f || !f_ || !o.f_) return f ? f->zero() : ExtElem{};
  const Fq& base = *f->base();
  BPoly a(v_.begin(), v_.end()), b(o.v_.begin(), o.v_.end());
  btrim(a);
  btrim(b);
  BPoly m(f->modulus());
  m.push_back(1);
  BPoly r = bmod(base, bmul(base, a, b), m);
  r.resize(f->degree(), 0);
  return ExtElem(f, std::move(r));
}

bool ExtElem::operator==(const ExtElem& o) const {
  if (!f_ || !o.f_) return is_zero() == o.is_zero() && (is_zero() || f_ == o.f_);
  if (f_ != o.f_) return false;
  return v_ == o.v_;
}

ExtElem ExtElem::inv() const {
  if (!f_ || is_zero()) throw std::domain_error("ExtElem::inv: zero has no inverse");
  const Fq& base = *f_->base();
  BPoly a(v_.begin(), v_.end());
  btrim(a);
  BPoly m(f_->modulus());
  m.push_back(1);
  BPoly r = binv_mod(base, std::move(a), m);
  r.resize(f_->degree(), 0);
  return ExtElem(f_, std::move(r));
}

ExtElem ExtElem::pow(uint64_t e) const {
  if (!f_) {
    if (e == 0) throw std::domain_error("ExtElem::pow: 0^0 without a field");
    return *this;
  }
  ExtElem r = f_->one();
  ExtElem b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
    e >>= 1;
  }
  return r;
}

ExtElem ExtElem::frobenius(unsigned k) const {
  if (!f_ || k == 0 || is_zero()) return *this;
  // x -> x^q has order d on F_{q^d}, so reduce k first.
  unsigned kk = k % f_->degree();
  uint64_t e = 1;
  for (unsigned i = 0; i < kk; ++i) e *= f_->q();
  return pow(e);
}

ExtElem ExtElem::qth_root() const {
  if (!f_ || is_zero()) return *this;
  return frobenius(f_->degree() - 1);  // x^{q^{d-1}} since x^{q^d} = x
}

bool ExtElem::in_subfield(unsigned j) const {
  if (!f_) return true;
  return frobenius(j) == *this;
}

std::string ExtElem::str() const {
  if (!f_) return "0";
  const Fq& base = *f_->base();
  std::string out;
  for (unsigned i = f_->degree(); i-- > 0;) {
    if (v_[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string c = base.to_string(v_[i]);
    bool paren = c.find('+') != std::string::npos;
    if (i == 0) {
      out += paren ? "(" + c + ")" : c;
    } else {
      if (v_[i] != 1) out += (paren ? "(" + c + ")" : c) + "*";
      out += i == 1 ? "u" : "u^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Embedding::Embedding(ExtFieldPtr from, ExtFieldPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_->base() != to_->base())
    throw std::invalid_argument("Embedding: different base fields");
  if (to_->degree() % from_->degree() != 0)
    throw std::invalid_argument("Embedding: target degree not a multiple of source");
  unsigned n = from_->degree();
  ExtElem rho;
  if (from_ == to_) {
    rho = to_->gen();
  } else {
    // Roots of the source modulus lie in the order-q^n subfield of `to`;
    // enumerate that subfield from a multiplicative generator and pick the
    // least root in code order.
    ExtElem g = to_->multiplicative_generator();
    uint64_t idx = (to_->order() - 1) / (from_->order() - 1);
    ExtElem w = g.pow(idx);
    std::vector<ExtElem> subfield;
    subfield.push_back(to_->zero());
    ExtElem cur = to_->one();
    for (uint64_t i = 0; i + 1 < from_->order(); ++i) {
      subfield.push_back(cur);
      cur = cur * w;
    }
    auto eval_mod = [&](const ExtElem& x) {
      // source modulus has coefficients in F_q
      ExtElem acc = to_->one();  // leading 1
      for (unsigned i = n; i-- > 0;)
        acc = acc * x + to_->from_base(from_->modulus()[i]);
      return acc;
    };
    uint64_t best = UINT64_MAX;
    for (const ExtElem& cand : subfield) {
      if (!eval_mod(cand).is_zero()) continue;
      uint64_t code = to_->to_code(cand);
      if (code < best) {
        best = code;
        rho = cand;
      }
    }
    if (best == UINT64_MAX)
      throw std::logic_error("Embedding: source modulus has no root in target");
  }
  gen_powers_.push_back(to_->one());
  for (unsigned i = 1; i < n; ++i) gen_powers_.push_back(gen_powers_.back() * rho);
}

ExtElem Embedding::operator()(const ExtElem& x) const {
  if (!x.field()) return {};
  if (x.field() != from_) throw std::invalid_argument("Embedding: wrong source field");
  if (from_ == to_) return x;
  ExtElem acc = to_->zero();
  for (unsigned i = 0; i < from_->degree(); ++i) {
    if (x.coords()[i] == 0) continue;
    acc = acc + gen_powers_[i] * to_->from_base(x.coords()[i]);
  }
  return acc;
}

ExtElem specialize(const RingElem& x, const ExtElem& theta,
                   std::span<const ExtElem> g_values) {
  const ExtFieldPtr& L = theta.field();
  if (!L) throw std::invalid_argument("specialize: theta must carry a field");
  if (x.field() && x.field()->q() != L->q())
    throw std::invalid_argument("specialize: base field mismatch");
  if (g_values.size() < x.nvars()) {
    for (const Term& t : x.terms())
      for (size_t i = g_values.size(); i < x.nvars(); ++i)
        if (t.m.g[i] != 0)
          throw std::invalid_argument("specialize: missing image for g variable");
  }
  ExtElem acc = L->zero();
  std::map<int32_t, ExtElem> tpow;
  ExtElem theta_inv;
  bool have_inv = false;
  for (const Term& t : x.terms()) {
    ExtElem v = L->from_base(t.c);
    if (t.m.t != 0) {
      auto it = tpow.find(t.m.t);
      if (it == tpow.end()) {
        ExtElem p;
        if (t.m.t > 0) {
          p = theta.pow(static_cast<uint64_t>(t.m.t));
        } else {
          if (theta.is_zero())
            throw std::domain_error("specialize: negative T power at theta = 0");
          if (!have_inv) {
            theta_inv = theta.inv();
            have_inv = true;
          }
          p = theta_inv.pow(static_cast<uint64_t>(-int64_t(t.m.t)));
        }
        it = tpow.emplace(t.m.t, std::move(p)).first;
      }
      v = v * it->second;
    }
    for (size_t i = 0; i < g_values.size(); ++i)
      if (t.m.g[i] != 0) v = v * g_values[i].pow(t.m.g[i]);
    acc = acc + v;
  }
  return acc;
}

}  // namespace drinmod
