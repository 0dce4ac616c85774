#ifndef DRINMOD_QUOTIENT_HPP
#define DRINMOD_QUOTIENT_HPP

#include <memory>
#include <stdexcept>
#include <utility>

#include "drinmod/ring.hpp"
#include "drinmod/upoly.hpp"

namespace drinmod {

/// The residue ring R_T[a]/(mod(a)) where R_T is the Laurent ring and the
/// leading coefficient of mod is a unit (c * T^k), which is all the kernel
/// polynomials Q and Q-tilde provide. Supplies the arithmetic needed to
/// check the dual-isogeny identities symbolically.
class QuotCtx {
 public:
  explicit QuotCtx(UPoly<RingElem> modulus) : mod_(std::move(modulus)) {
    if (mod_.degree() < 1)
      throw std::invalid_argument("QuotCtx: modulus must have positive degree");
    lead_inv_ = mod_.leading().inv();  // throws unless a monomial unit
  }

  const UPoly<RingElem>& modulus() const { return mod_; }
  const RingElem& lead_inv() const { return lead_inv_; }
  unsigned q() const { return mod_.leading().q(); }

  UPoly<RingElem> reduce(UPoly<RingElem> v) const {
    long dm = mod_.degree();
    while (v.degree() >= dm) {
      size_t k = static_cast<size_t>(v.degree());
      RingElem c = v.leading() * lead_inv_;
      std::vector<RingElem> sub(k + 1);
      for (long j = 0; j <= dm; ++j)
        sub[k - dm + j] = mod_.coeff(j) * c;
      v = v - UPoly<RingElem>(std::move(sub));
    }
    return v;
  }

 private:
  UPoly<RingElem> mod_;
  RingElem lead_inv_;
};

using QuotCtxPtr = std::shared_ptr<const QuotCtx>;

class QuotElem {
 public:
  QuotElem() = default;
  QuotElem(QuotCtxPtr ctx, UPoly<RingElem> v) : ctx_(std::move(ctx)) {
    v_ = ctx_->reduce(std::move(v));
  }

  static QuotElem generator(const QuotCtxPtr& ctx) {
    const RingElem& lead = ctx->modulus().leading();
    std::vector<RingElem> v(2);
    v[0] = RingElem::zero(lead.field(), lead.nvars());
    v[1] = RingElem::one(lead.field(), lead.nvars());
    return QuotElem(ctx, UPoly<RingElem>(std::move(v)));
  }
  static QuotElem lift(const QuotCtxPtr& ctx, const RingElem& x) {
    return QuotElem(ctx, UPoly<RingElem>::constant(x));
  }
  static QuotElem one(const QuotCtxPtr& ctx) {
    const RingElem& lead = ctx->modulus().leading();
    return lift(ctx, RingElem::one(lead.field(), lead.nvars()));
  }

  const QuotCtxPtr& ctx() const { return ctx_; }
  const UPoly<RingElem>& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_.degree() == 0 && v_.coeff(0).is_one(); }

  QuotElem operator+(const QuotElem& o) const {
    const QuotCtxPtr& c = resolve(o);
    if (!c) return {};
    return QuotElem(c, v_ + o.v_);
  }
  QuotElem operator-(const QuotElem& o) const {
    const QuotCtxPtr& c = resolve(o);
    if (!c) return {};
    return QuotElem(c, v_ - o.v_);
  }
  QuotElem operator-() const {
    if (!ctx_) return {};
    return QuotElem(ctx_, -v_);
  }
  QuotElem operator*(const QuotElem& o) const {
    const QuotCtxPtr& c = resolve(o);
    if (!c) return {};
    return QuotElem(c, v_ * o.v_);
  }
  bool operator==(const QuotElem& o) const { return v_ == o.v_; }
  bool operator!=(const QuotElem& o) const { return !(*this == o); }

  QuotElem pow(uint64_t e) const {
    if (!ctx_) throw std::domain_error("QuotElem::pow on null element");
    QuotElem r = one(ctx_);
    QuotElem b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = e > 1 ? b * b : b;
      e >>= 1;
    }
    return r;
  }

  QuotElem frobenius(unsigned k) const {
    if (!ctx_ || v_.is_zero()) return *this;
    uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i) e *= ctx_->q();
    return pow(e);
  }

 private:
  const QuotCtxPtr& resolve(const QuotElem& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_)
      throw std::invalid_argument("QuotElem: mixed quotient rings");
    return ctx_ ? ctx_ : o.ctx_;
  }

  QuotCtxPtr ctx_;
  UPoly<RingElem> v_;
};

inline QuotElem frob(const QuotElem& a, unsigned k) { return a.frobenius(k); }

}  // namespace drinmod

#endif
