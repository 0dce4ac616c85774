#include "drinmod/isogeny.hpp"

#include <stdexcept>

#include "drinmod/quotient.hpp"

namespace drinmod {

uint64_t geom_sum(unsigned q, unsigned lo, unsigned hi) {
  if (lo > hi) throw std::invalid_argument("geom_sum: lo > hi");
  uint64_t term = 1, sum = 0;
  for (unsigned j = 0; j < hi; ++j) {
    if (j >= lo) sum += term;
    if (j + 1 < hi && term > UINT64_MAX / q)
      throw std::overflow_error("geom_sum: overflow");
    term *= q;
  }
  return sum;
}

bool verify_dual_identity(const FqPtr& field, unsigned r, IsoType dir) {
  DrinfeldModule<RingElem> m = monic_generic(field, r);
  UPoly<RingElem> mod = (dir == IsoType::outgoing)
                            ? build_Q(m)
                            : build_Qtilde(m, Normalization::prop21);
  auto ctx = std::make_shared<const QuotCtx>(std::move(mod));
  QuotElem a = QuotElem::generator(ctx);
  QuotElem one = QuotElem::one(ctx);

  // Lift the module into the quotient ring.
  std::vector<QuotElem> gs;
  for (const RingElem& g : m.g) gs.push_back(QuotElem::lift(ctx, g));
  DrinfeldModule<QuotElem> mq(m.q, m.r, QuotElem::lift(ctx, m.gamma_T),
                              std::move(gs), QuotElem::lift(ctx, m.delta));

  SkewPoly<QuotElem> f(std::vector<QuotElem>{one, a});
  SkewPoly<QuotElem> fhat(dual_coeffs(mq, a, dir));
  SkewPoly<QuotElem> lhs = (dir == IsoType::outgoing) ? skew_mul(fhat, f)
                                                      : skew_mul(f, fhat);
  return lhs == mq.to_skew();
}

}  // namespace drinmod
