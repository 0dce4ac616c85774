#include "drinmod/pipeline.hpp"

#include <map>

#include "drinmod/error.hpp"
#include "drinmod/io.hpp"
#include "drinmod/matrix.hpp"

namespace drinmod {

namespace {

using Mat = Matrix<RingElem>;

void report(const PipelineOptions& opts, const std::string& msg) {
  if (opts.progress) opts.progress(msg);
}

// Memoized powers of a fixed matrix; the recurrences reuse the same
// Frobenius powers of M_v and M_a across stages.
class PowerCache {
 public:
  PowerCache(Mat base, RingElem one) : one_(std::move(one)) {
    memo_[1] = std::move(base);
  }
  const Mat& get(uint64_t e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    if (e == 0) return memo_.emplace(0, Mat::identity(memo_[1].dim(), one_)).first->second;
    const Mat& half = get(e / 2);
    Mat v = half * half;
    if (e & 1) v = v * memo_[1];
    return memo_.emplace(e, std::move(v)).first->second;
  }

 private:
  std::map<uint64_t, Mat> memo_;
  RingElem one_;
};

struct Stage {
  const DrinfeldModule<RingElem>& m;
  const MonomialInvariant& J;
  IsoType type;
  const PipelineOptions& opts;

  uint64_t psi;
  RingElem one, zero;

  Stage(const DrinfeldModule<RingElem>& mod, const MonomialInvariant& Jv,
        IsoType t, const PipelineOptions& o)
      : m(mod), J(Jv), type(t), opts(o), psi(psi_r(mod.q, mod.r)) {
    one = RingElem::one(m.gamma_T.field(), m.gamma_T.nvars());
    zero = RingElem::zero(m.gamma_T.field(), m.gamma_T.nvars());
  }

  // Builds M_J; shared by the full run and the trace-only path.
  Mat lift_invariant() {
    if (!m.is_monic())
      throw std::invalid_argument("pipeline: module must be monic (delta = 1)");
    report(opts, "building kernel polynomial");
    UPoly<RingElem> K = (type == IsoType::outgoing)
                            ? build_Q(m)
                            : build_Qtilde(m, Normalization::prop22);
    if (static_cast<uint64_t>(K.degree()) != psi)
      throw fault("kernel", "deg = " + std::to_string(K.degree()) +
                                ", expected psi = " + std::to_string(psi));
    UPoly<RingElem> P = K.reciprocal(psi);
    if (!P.is_monic())
      throw fault("reciprocal", "P is not monic; constant term of the kernel "
                                "polynomial was not 1");

    report(opts, "companion matrix and its inverse");
    Mat Mv = companion(P);
    auto [Ma, det] = adjugate_inverse(Mv, one);
    if (!det.is_unit())
      throw fault("invert", "det(M_v) = " + to_string(det) + " is not a unit");

    PowerCache vpow(Mv, one), apow(Ma, one);

    // Prop. 2.2 recurrences with the scalar a replaced by M_a. Scalar
    // base-ring Frobenius powers stay coefficient-wise; powers of already
    // lifted matrices go through matrix powers.
    std::vector<Mat> gt;  // g~_0 = T I, then g~_1 .. g~_{r-1}
    gt.push_back(Mat::scalar(Mv.dim(), m.gamma_T));
    auto qk = [this](unsigned k) {
      uint64_t v = 1;
      for (unsigned i = 0; i < k; ++i) v *= m.q;
      return v;
    };
    for (unsigned k = 1; k < m.r; ++k) {
      report(opts, "recurrence k = " + std::to_string(k));
      const RingElem& gk = m.coeff(k);
      RingElem gkm1_q = frob(m.coeff(k - 1), 1);
      Mat cur(Mv.dim());
      if (type == IsoType::outgoing) {
        // g~_k = a^{q^k} (a^{-1} g_k + g_{k-1}^q - g~_{k-1})
        Mat inner = vpow.get(1).scaled(gk) + Mat::scalar(Mv.dim(), gkm1_q) - gt.back();
        cur = apow.get(qk(k)) * inner;
      } else {
        // g~_k = a (g_{k-1} - g~_{k-1}^q) + a^{1-q^k} g_k
        Mat prev_q = gt.back().pow(m.q, one);
        Mat first = apow.get(1) * (Mat::scalar(Mv.dim(), m.coeff(k - 1)) - prev_q);
        cur = first + vpow.get(qk(k) - 1).scaled(gk);
      }
      gt.push_back(std::move(cur));
    }

    if (opts.assert_commute) {
      for (unsigned k = 1; k < m.r; ++k)
        if (gt[k] * Mv != Mv * gt[k])
          throw fault("commute", "M_{g~_" + std::to_string(k) +
                                     "} does not commute with M_v");
    }

    report(opts, "assembling M_J");
    Mat MJ = Mat::identity(Mv.dim(), one);
    for (unsigned i = 0; i + 1 < m.r; ++i) {
      if (J.e[i] == 0) continue;
      MJ = MJ * gt[i + 1].pow(J.e[i], one);
    }
    if (opts.assert_commute && MJ * Mv != Mv * MJ)
      throw fault("commute", "M_J does not commute with M_v");
    return MJ;
  }
};

void check_coefficient(const RingElem& a, uint64_t k, uint64_t psi, long long w,
                       const PipelineOptions& opts) {
  if (a.has_negative_t())
    throw fault("laurent", "a_" + std::to_string(k) +
                               " kept a negative T power: " + to_string(a));
  if (opts.check_membership && !membership_check_C(a))
    throw fault("membership", "a_" + std::to_string(k) +
                                  " is not in C': " + to_string(a));
  if (opts.check_bounds) {
    auto d = a.deg_T();
    long long bound = static_cast<long long>(psi - k) * w;
    if (d && *d > bound)
      throw fault("bounds", "deg_T a_" + std::to_string(k) + " = " +
                                std::to_string(*d) + " exceeds " +
                                std::to_string(bound));
    if (k == 0 && (!d || *d != bound))
      throw fault("bounds", "deg_T a_0 must equal psi*w = " + std::to_string(bound));
  }
}

}  // namespace

ModularPolynomial run_pipeline(const DrinfeldModule<RingElem>& module,
                               const MonomialInvariant& J, IsoType type,
                               const PipelineOptions& opts) {
  if (J.q != module.q || J.r != module.r)
    throw std::invalid_argument("run_pipeline: invariant (q, r) does not match module");
  Stage st(module, J, type, opts);
  Mat MJ = st.lift_invariant();

  report(opts, "characteristic polynomial");
  UPoly<RingElem> phi = charpoly_division_free(MJ, st.one);

  ModularPolynomial mp;
  mp.q = module.q;
  mp.r = module.r;
  mp.J = J;
  mp.type = type;
  mp.psi = st.psi;
  mp.s = (type == IsoType::outgoing) ? 1 : module.r - 1;
  mp.w = weight(J, mp.s);

  if (static_cast<uint64_t>(phi.degree()) != st.psi)
    throw fault("charpoly", "deg Phi = " + std::to_string(phi.degree()) +
                                ", expected " + std::to_string(st.psi));
  if (!phi.is_monic()) throw fault("charpoly", "Phi is not monic");

  mp.coeffs.reserve(st.psi + 1);
  for (uint64_t k = 0; k <= st.psi; ++k) {
    const RingElem& a = phi.coeff(k);
    check_coefficient(a, k, st.psi, mp.w, opts);
    mp.coeffs.push_back(a);
  }
  report(opts, "done");
  return mp;
}

ModularPolynomial compute_modpoly(const FqPtr& field, unsigned r,
                                  const MonomialInvariant& J, IsoType type,
                                  const PipelineOptions& opts) {
  return run_pipeline(monic_generic(field, r), J, type, opts);
}

TraceSanity trace_sanity(const FqPtr& field, unsigned r,
                         const MonomialInvariant& J, IsoType type,
                         const PipelineOptions& opts) {
  DrinfeldModule<RingElem> m = monic_generic(field, r);
  if (J.q != m.q || J.r != m.r)
    throw std::invalid_argument("trace_sanity: invariant (q, r) does not match module");
  Stage st(m, J, type, opts);
  Mat MJ = st.lift_invariant();
  TraceSanity ts;
  ts.a_psi_minus_1 = -MJ.trace();
  unsigned s = (type == IsoType::outgoing) ? 1 : r - 1;
  long long w = weight(J, s);
  auto d = ts.a_psi_minus_1.deg_T();
  ts.pass = !ts.a_psi_minus_1.has_negative_t() &&
            membership_check_C(ts.a_psi_minus_1) && (!d || *d <= w);
  return ts;
}

TheoremReport verify_theorem(const ModularPolynomial& mp) {
  TheoremReport rep;
  rep.expected_height = static_cast<long long>(mp.psi) * mp.w;
  long long height = 0;
  bool bounds = true, sharp = true;
  for (uint64_t k = 0; k <= mp.psi; ++k) {
    TheoremRow row;
    row.k = k;
    row.bound = static_cast<long long>(mp.psi - k) * mp.w;
    auto d = mp.coeffs[k].deg_T();
    if (d) {
      row.deg = *d;
      height = std::max(height, static_cast<long long>(*d));
    }
    row.sharp = d && *d == row.bound;
    if (d && *d > row.bound) bounds = false;
    if (!row.sharp) sharp = false;
    rep.rows.push_back(row);
  }
  if (!bounds)
    throw fault("verify_theorem", "a Theorem degree bound is violated; the "
                                  "pipeline produced an impossible polynomial");
  rep.height = height;
  rep.bounds_hold = bounds;
  rep.height_ok = height == rep.expected_height &&
                  rep.rows[0].deg && *rep.rows[0].deg == rep.rows[0].bound;
  rep.all_sharp = sharp;
  return rep;
}

std::vector<TheoremRow> degree_table(const ModularPolynomial& mp) {
  return verify_theorem(mp).rows;
}

}  // namespace drinmod
