#include "gnf/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnf/operators.hpp"

namespace gnf {

namespace {

double tensor_action(const CrossSection& cs, const QuadTensor& a, const QuadTensor& b) {
  const FeSpace& fe = cs.fe();
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) s += fe.qp(g).w * cs.weight(fe.qp(g).x2) * ddot(a[g], b[g]);
  return s;
}

QuadTensor apply_tau(double p, const QuadTensor& f) {
  const PowerLawModel model{p, 1.0};
  QuadTensor out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = tau(model, f[g]);
  return out;
}

SymTensor3 plane_block(const SymTensor3& t) { return {t.c[0], t.c[1], 0.0, t.c[3], 0.0, 0.0}; }

}  // namespace

std::vector<InequalityCheck> tensor_field_estimates_thick(const CrossSection& cs, double p,
                                                          const QuadTensor& f, const QuadTensor& g) {
  if (p < 2.0) throw std::invalid_argument("thickening field estimates need p >= 2");
  const double pc = conjugate_exponent(p);
  const auto fb = [&](double lam) { return std::pow(std::pow(cs.b_l1, 1.0 / p) + lam, p - 2.0); };
  const QuadScalar mf = magnitudes(f), mg = magnitudes(g);
  const double nf = weighted_norm(cs, mf, p), ng = weighted_norm(cs, mg, p);
  const QuadTensor tf = apply_tau(p, f), tg = apply_tau(p, g);
  const QuadTensor d = difference(f, g);
  const QuadScalar md = magnitudes(d);

  QuadScalar scaled(mf.size());
  for (std::size_t k = 0; k < mf.size(); ++k) scaled[k] = std::pow(1.0 + mf[k] * mf[k], 0.5 * (p - 2.0)) * mg[k];

  const double coer = tensor_action(cs, tf, f);
  const double mono = tensor_action(cs, difference(tf, tg), d);
  const double nd2 = weighted_norm(cs, md, 2.0), ndp = weighted_norm(cs, md, p);

  std::vector<InequalityCheck> out;
  out.push_back(check_le("field-continuity-factor", weighted_norm(cs, scaled, pc), fb(nf) * ng));
  out.push_back(check_le("field-continuity", weighted_norm(cs, magnitudes(difference(tf, tg)), pc),
                         2.0 * (p - 1.0) * fb(nf + ng) * ndp));
  out.push_back(check_ge("field-coercivity-l2", coer, 2.0 * std::pow(weighted_norm(cs, mf, 2.0), 2.0)));
  out.push_back(check_ge("field-coercivity-lp", coer, 2.0 * std::pow(nf, p)));
  out.push_back(check_ge("field-monotonicity-l2", mono, 2.0 * nd2 * nd2));
  out.push_back(check_ge("field-monotonicity-lp", mono, std::pow(ndp, p) / (std::pow(2.0, p - 1.0) * (p - 1.0))));
  return out;
}

std::vector<InequalityCheck> tensor_field_estimates_thin(const CrossSection& cs, double p,
                                                         const QuadTensor& f, const QuadTensor& g) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("thinning field estimates need 1 < p < 2");
  const double pc = conjugate_exponent(p);
  const QuadScalar mf = magnitudes(f), mg = magnitudes(g);
  const double nf = weighted_norm(cs, mf, p), ng = weighted_norm(cs, mg, p);
  const QuadTensor tf = apply_tau(p, f), tg = apply_tau(p, g);
  const QuadTensor d = difference(f, g);
  const double ndp = weighted_norm(cs, magnitudes(d), p);

  // Clip g pointwise so that |g| <= |f|.
  QuadScalar clipped(mf.size()), scaled(mf.size());
  for (std::size_t k = 0; k < mf.size(); ++k) {
    clipped[k] = std::min(mg[k], mf[k]);
    scaled[k] = std::pow(1.0 + mf[k] * mf[k], 0.5 * (p - 2.0)) * clipped[k];
  }
  const double coer = tensor_action(cs, tf, f);
  const double mono = tensor_action(cs, difference(tf, tg), d);

  std::vector<InequalityCheck> out;
  out.push_back(check_le("field-continuity-factor", weighted_norm(cs, scaled, pc),
                         std::pow(weighted_norm(cs, clipped, p), p - 1.0)));
  out.push_back(check_le("field-continuity", weighted_norm(cs, magnitudes(difference(tf, tg)), pc),
                         2.0 * thinning_continuity_constant(p) * std::pow(ndp, p - 1.0)));
  out.push_back(check_ge("field-coercivity", coer,
                         2.0 * nf * nf / std::pow(cs.b_l1 + std::pow(nf, p), (2.0 - p) / p)));
  out.push_back(check_ge("field-monotonicity", mono,
                         2.0 * (p - 1.0) * ndp * ndp /
                             std::pow(cs.b_l1 + std::pow(nf, p) + std::pow(ng, p), (2.0 - p) / p)));
  return out;
}

InequalityCheck divergence_gap_check(const CrossSection& cs, double p, const QuadTensor& f) {
  const FeSpace& fe = cs.fe();
  const double pc = conjugate_exponent(p);
  const QuadTensor t = apply_tau(p, f);
  QuadScalar gap(f.size()), plane(f.size()), f33(f.size()), f23(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    const double k = cs.delta / cs.weight(fe.qp(static_cast<int>(g)).x2);
    const double a = t[g](0, 1), b = t[g](1, 1) - t[g](2, 2), c = 2.0 * t[g](1, 2);
    gap[g] = k * std::sqrt(a * a + b * b + c * c);
    plane[g] = norm(plane_block(f[g]));
    f33[g] = f[g](2, 2);
    f23[g] = f[g](1, 2);
  }
  const double lhs = lq_norm(cs, gap, pc, false);
  const double np = lq_norm(cs, plane, p, false), n33 = lq_norm(cs, f33, p, false),
               n23 = lq_norm(cs, f23, p, false);
  double rhs;
  if (p >= 2.0) {
    const double nf = lq_norm(cs, magnitudes(f), p, false);
    const double f1 = std::pow(std::pow(cs.area, 1.0 / p) + nf, p - 2.0);
    rhs = 4.0 * cs.delta * cs.m * f1 * (np + n33 + n23);
  } else {
    rhs = 4.0 * cs.delta * cs.m * (std::pow(np, p - 1.0) + std::pow(n33, p - 1.0) + std::pow(n23, p - 1.0));
  }
  return check_le("divergence-gap", lhs, rhs);
}

InequalityCheck trilinear_bound_thick(const CrossSection& cs, const QuadField& u, const QuadField& v,
                                      const QuadField& w) {
  const double k3 = cs.n * std::pow(cs.m, 1.5) * std::pow(cs.area, 0.75);
  const auto nd = [&](const QuadField& f) { return weighted_norm(cs, magnitudes(d_star(cs, f)), 2.0); };
  return check_le("trilinear-l2", std::abs(trilinear_star(cs, u, v, w)), k3 * nd(u) * nd(v) * nd(w));
}

InequalityCheck trilinear_bound_thin(const CrossSection& cs, double p, double korn_classical,
                                     const QuadField& u, const QuadField& v, const QuadField& w) {
  const double ck = korn_thin_constant(cs, p, korn_classical);
  const double s = sobolev_constant(p, 2.0 * conjugate_exponent(p), cs.area);
  const double k6 = cs.n * std::pow(cs.m, 3.0 / p) / (ck * ck * ck) * s * s;
  const auto nd = [&](const QuadField& f) { return weighted_norm(cs, magnitudes(d_star(cs, f)), p); };
  return check_le("trilinear-lp", std::abs(trilinear_star(cs, u, v, w)), k6 * nd(u) * nd(v) * nd(w));
}

std::vector<InequalityCheck> sigma_estimate_checks(const CrossSection& cs, const SigmaSpec& sigma, double q,
                                                   const QuadField& u, const QuadField& v) {
  const FeSpace& fe = cs.fe();
  const SigmaConstants k = sigma_constants(q, sigma.alpha, cs.area);
  QuadScalar su(u.size());
  double pairing = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) {
    su[g] = sigma.value(u[g].u[2]);
    pairing += fe.qp(g).w * su[g] * v[g].u[2];
  }
  const double gu_q = lq_norm(cs, grad_component_magnitude(u, 2), q, false);
  const double gv_q = lq_norm(cs, grad_component_magnitude(v, 2), q, false);
  std::vector<InequalityCheck> out;
  out.push_back(check_le("sigma-pairing", std::abs(pairing),
                         sigma.c0 * k.d * std::pow(gu_q, sigma.alpha) * gv_q));
  if (k.e) {
    const double gu = q >= 2.0 ? lq_norm(cs, grad_component_magnitude(u, 2), 2.0, false) : gu_q;
    out.push_back(check_le("sigma-dual-norm", lq_norm(cs, su, conjugate_exponent(q), false),
                           sigma.c0 * *k.e * std::pow(gu, sigma.alpha)));
  }
  return out;
}

}  // namespace gnf
