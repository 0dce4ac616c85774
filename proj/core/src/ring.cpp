#include "drinmod/ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace drinmod {

bool monomial_before(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_gdeg(), db = b.total_gdeg();
  if (da != db) return da > db;
  for (unsigned i = 0; i < Monomial::kMaxVars; ++i)
    if (a.g[i] != b.g[i]) return a.g[i] > b.g[i];
  return a.t > b.t;
}

namespace {

bool term_before(const Term& x, const Term& y) { return monomial_before(x.m, y.m); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  int64_t t = int64_t(a.t) + int64_t(b.t);
  if (t < INT32_MIN || t > INT32_MAX)
    throw std::overflow_error("RingElem: T exponent overflow");
  r.t = static_cast<int32_t>(t);
  for (unsigned i = 0; i < Monomial::kMaxVars; ++i) {
    uint32_t e = uint32_t(a.g[i]) + uint32_t(b.g[i]);
    if (e > 0xffff) throw std::overflow_error("RingElem: g exponent overflow");
    r.g[i] = static_cast<uint16_t>(e);
  }
  return r;
}

}  // namespace

// Open-addressing accumulator for products; keys live in a power-of-two
// table with linear probing. Zero coefficients are kept in place and
// filtered on extraction.
class MulAccumulator {
 public:
  explicit MulAccumulator(size_t expected) {
    size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.resize(cap);
  }

  void add(const Fq& f, const Monomial& m, uint32_t c) {
    if (2 * (used_ + 1) > slots_.size()) grow();
    size_t mask = slots_.size() - 1;
    size_t i = m.hash() & mask;
    for (;;) {
      Slot& s = slots_[i];
      if (!s.used) {
        s.used = true;
        s.m = m;
        s.c = c;
        ++used_;
        return;
      }
      if (s.m == m) {
        s.c = f.add(s.c, c);
        return;
      }
      i = (i + 1) & mask;
    }
  }

  std::vector<Term> extract() {
    std::vector<Term> out;
    out.reserve(used_);
    for (const Slot& s : slots_)
      if (s.used && s.c != 0) out.push_back({s.m, s.c});
    std::sort(out.begin(), out.end(), term_before);
    return out;
  }

 private:
  struct Slot {
    Monomial m;
    uint32_t c = 0;
    bool used = false;
  };

  void grow() {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.resize(old.size() * 2);
    size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (!s.used) continue;
      size_t i = s.m.hash() & mask;
      while (slots_[i].used) i = (i + 1) & mask;
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  size_t used_ = 0;
};

void RingElem::check_compat(const RingElem& o) const {
  if (!field_ || !o.field_) return;  // universal zero is compatible
  if (field_ != o.field_ || nvars_ != o.nvars_)
    throw std::invalid_argument("RingElem: mismatched (q, r) contexts");
}

RingElem RingElem::zero(const FqPtr& f, unsigned nvars) {
  if (nvars > Monomial::kMaxVars)
    throw std::invalid_argument("RingElem: too many g variables");
  RingElem r;
  r.field_ = f;
  r.nvars_ = static_cast<uint16_t>(nvars);
  return r;
}

RingElem RingElem::constant(const FqPtr& f, unsigned nvars, uint32_t code) {
  RingElem r = zero(f, nvars);
  if (code >= f->q()) throw std::invalid_argument("RingElem: bad coefficient code");
  if (code != 0) r.terms_.push_back({Monomial{}, code});
  return r;
}

RingElem RingElem::monomial(const FqPtr& f, unsigned nvars, uint32_t code,
                            int32_t t, std::span<const uint16_t> e) {
  RingElem r = zero(f, nvars);
  if (code >= f->q()) throw std::invalid_argument("RingElem: bad coefficient code");
  if (e.size() > nvars) throw std::invalid_argument("RingElem: exponent list too long");
  if (code == 0) return r;
  Term tm;
  tm.m.t = t;
  for (size_t i = 0; i < e.size(); ++i) tm.m.g[i] = e[i];
  tm.c = code;
  r.terms_.push_back(tm);
  return r;
}

RingElem RingElem::var(const FqPtr& f, unsigned nvars, unsigned i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("RingElem::var: index out of range");
  RingElem r = zero(f, nvars);
  Term tm;
  tm.m.g[i - 1] = 1;
  tm.c = 1;
  r.terms_.push_back(tm);
  return r;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].c == 1 && terms_[0].m == Monomial{};
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_compat(o);
  if (is_zero()) return o.field_ ? o : *this;
  if (o.is_zero()) return *this;
  const Fq& f = *field_;
  RingElem r = zero(field_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].m == o.terms_[j].m) {
      uint32_t c = f.add(terms_[i].c, o.terms_[j].c);
      if (c != 0) r.terms_.push_back({terms_[i].m, c});
      ++i, ++j;
    } else if (monomial_before(terms_[i].m, o.terms_[j].m)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

RingElem RingElem::operator-() const {
  if (!field_) return *this;
  RingElem r = *this;
  for (Term& t : r.terms_) t.c = field_->neg(t.c);
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  check_compat(o);
  if (is_zero() || o.is_zero()) {
    if (field_) return zero(field_, nvars_);
    return o.field_ ? zero(o.field_, o.nvars_) : RingElem{};
  }
  const Fq& f = *field_;
  // Single-term shortcuts keep the hot recurrences cheap.
  if (o.terms_.size() == 1 || terms_.size() == 1) {
    const RingElem& many = terms_.size() == 1 ? o : *this;
    const Term& single = terms_.size() == 1 ? terms_[0] : o.terms_[0];
    RingElem r = zero(field_, nvars_);
    r.terms_.reserve(many.terms_.size());
    // Adding a fixed exponent vector to every monomial preserves the
    // canonical order, so no re-sort is needed.
    for (const Term& t : many.terms_)
      r.terms_.push_back({mono_mul(t.m, single.m), f.mul(t.c, single.c)});
    return r;
  }
  MulAccumulator acc(terms_.size() * o.terms_.size() / 4 + 8);
  for (const Term& x : terms_)
    for (const Term& y : o.terms_)
      acc.add(f, mono_mul(x.m, y.m), f.mul(x.c, y.c));
  RingElem r = zero(field_, nvars_);
  r.terms_ = acc.extract();
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (field_ && o.field_ && (field_ != o.field_ || nvars_ != o.nvars_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

RingElem RingElem::scaled(uint32_t code) const {
  if (!field_) return *this;
  if (code == 0) return zero(field_, nvars_);
  RingElem r = *this;
  for (Term& t : r.terms_) t.c = field_->mul(t.c, code);
  return r;
}

RingElem RingElem::pow(uint64_t e) const {
  if (!field_) {
    if (e == 0) throw std::domain_error("RingElem::pow: 0^0 without a ring");
    return *this;
  }
  RingElem r = one(field_, nvars_);
  RingElem b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = e > 1 ? b * b : b;
    e >>= 1;
  }
  return r;
}

RingElem RingElem::frobenius(unsigned k) const {
  if (!field_ || k == 0) return *this;
  uint64_t qe = 1;
  for (unsigned i = 0; i < k; ++i) {
    qe *= field_->q();
    if (qe > (uint64_t(1) << 40))
      throw std::overflow_error("RingElem::frobenius: q^k too large");
  }
  RingElem r = zero(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s;
    int64_t te = int64_t(t.m.t) * int64_t(qe);
    if (te < INT32_MIN || te > INT32_MAX)
      throw std::overflow_error("RingElem::frobenius: T exponent overflow");
    s.m.t = static_cast<int32_t>(te);
    for (unsigned i = 0; i < Monomial::kMaxVars; ++i) {
      uint64_t e = uint64_t(t.m.g[i]) * qe;
      if (e > 0xffff) throw std::overflow_error("RingElem::frobenius: g exponent overflow");
      s.m.g[i] = static_cast<uint16_t>(e);
    }
    s.c = field_->pow(t.c, qe);
    r.terms_.push_back(s);
  }
  // Exponent scaling by q^k preserves the canonical order.
  return r;
}

RingElem RingElem::qth_root() const {
  if (!field_) return *this;
  unsigned q = field_->q();
  RingElem r = zero(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s;
    if (t.m.t % static_cast<int32_t>(q) != 0)
      throw std::domain_error("RingElem::qth_root: T exponent not divisible by q");
    s.m.t = t.m.t / static_cast<int32_t>(q);
    for (unsigned i = 0; i < Monomial::kMaxVars; ++i) {
      if (t.m.g[i] % q != 0)
        throw std::domain_error("RingElem::qth_root: g exponent not divisible by q");
      s.m.g[i] = static_cast<uint16_t>(t.m.g[i] / q);
    }
    s.c = t.c;  // x -> x^q fixes F_q pointwise
    r.terms_.push_back(s);
  }
  return r;
}

std::optional<int32_t> RingElem::deg_T() const {
  if (terms_.empty()) return std::nullopt;
  int32_t d = terms_[0].m.t;
  for (const Term& t : terms_) d = std::max(d, t.m.t);
  return d;
}

std::optional<int32_t> RingElem::min_deg_T() const {
  if (terms_.empty()) return std::nullopt;
  int32_t d = terms_[0].m.t;
  for (const Term& t : terms_) d = std::min(d, t.m.t);
  return d;
}

bool RingElem::has_negative_t() const {
  auto m = min_deg_T();
  return m.has_value() && *m < 0;
}

bool RingElem::is_unit() const {
  return terms_.size() == 1 && terms_[0].m.total_gdeg() == 0;
}

RingElem RingElem::inv() const {
  if (!is_unit())
    throw std::domain_error(
        "RingElem::inv: only monomial units c*T^k are invertible in the Laurent ring");
  RingElem r = zero(field_, nvars_);
  Term t;
  t.m.t = -terms_[0].m.t;
  t.c = field_->inv(terms_[0].c);
  r.terms_.push_back(t);
  return r;
}

RingElem RingElem::substitute(std::span<const RingElem> images) const {
  if (is_zero()) {
    if (!images.empty() && images[0].field())
      return zero(images[0].field(), images[0].nvars());
    return *this;
  }
  if (images.size() < nvars_) {
    // Allowed as long as the missing variables never occur.
    for (const Term& t : terms_)
      for (size_t i = images.size(); i < nvars_; ++i)
        if (t.m.g[i] != 0)
          throw std::invalid_argument("RingElem::substitute: missing image for g variable");
  }
  FqPtr tf = field_;
  unsigned tn = nvars_;
  if (!images.empty()) {
    tf = images[0].field();
    tn = images[0].nvars();
    for (const RingElem& im : images)
      if (im.field() && (im.field() != tf || im.nvars() != tn))
        throw std::invalid_argument("RingElem::substitute: images in mixed rings");
    if (tf != field_)
      throw std::invalid_argument("RingElem::substitute: images over a different field");
  }
  RingElem acc = zero(tf, tn);
  std::vector<std::map<uint16_t, RingElem>> cache(images.size());
  for (const Term& t : terms_) {
    RingElem prod = monomial(tf, tn, t.c, t.m.t);
    for (size_t i = 0; i < images.size(); ++i) {
      uint16_t e = t.m.g[i];
      if (e == 0) continue;
      auto it = cache[i].find(e);
      if (it == cache[i].end())
        it = cache[i].emplace(e, images[i].pow(e)).first;
      prod = prod * it->second;
    }
    acc = acc + prod;
  }
  return acc;
}

RingElem RingElem::from_terms(const FqPtr& f, unsigned nvars, std::vector<Term> ts) {
  MulAccumulator acc(ts.size());
  for (const Term& t : ts) {
    if (t.c >= f->q()) throw std::invalid_argument("RingElem::from_terms: bad code");
    for (size_t i = nvars; i < Monomial::kMaxVars; ++i)
      if (t.m.g[i] != 0) throw std::invalid_argument("RingElem::from_terms: exponent beyond nvars");
    acc.add(*f, t.m, t.c);
  }
  RingElem r = zero(f, nvars);
  r.terms_ = acc.extract();
  return r;
}

}  // namespace drinmod
