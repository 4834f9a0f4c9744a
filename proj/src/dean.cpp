#include "gnf/dean.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "assembly.hpp"
#include "gnf/operators.hpp"

namespace gnf {

DeanResult solve_dean(const CrossSection& cs, const FlowParams& params, const SigmaSpec& sigma,
                      const SolverOptions& opts, const Solution* guess) {
  params.validate();
  opts.validate();
  if (std::abs(cs.delta - params.delta) > 1e-15)
    throw std::invalid_argument("cross-section curvature does not match the flow parameters");
  const FeSpace& fe = cs.fe();

  Eigen::VectorXd x = Eigen::VectorXd::Zero(detail::n_unknowns(fe));
  if (guess) {
    x.head(3 * fe.n_p2()) = guess->u.coef;
    x.segment(3 * fe.n_p2(), fe.n_p1()) = guess->pi.coef;
  } else if (opts.initial == InitialGuess::axial_poiseuille) {
    FlowParams flat = params;
    flat.delta = 0.0;
    const ScalarField w3 = axial_only_solve(cs.with_delta(0.0), flat, opts);
    for (int k = 0; k < fe.n_p2(); ++k) x[3 * k + 2] = w3.coef[k];
  }

  detail::FlowForm form;
  form.curvature = 0.0;
  form.model = params.model();
  form.re = params.re;
  const double g = params.g, dl = params.delta;
  form.axial_force = [g, dl](double, double x2) { return g / (1.0 + dl * x2); };
  form.sigma = &sigma;
  form.sigma_scale = dl;

  const detail::DriveResult d = detail::drive(fe, form, x, opts);
  DeanResult out;
  out.converged = d.converged;
  out.iterations = d.iterations;
  out.residual_history = d.history;
  out.message = d.message;
  out.solution = {{x.head(3 * fe.n_p2())}, {x.segment(3 * fe.n_p2(), fe.n_p1())}};
  out.constants = dean_constants(cs, params, sigma, opts.korn_constant);
  out.norms = dean_norms(cs, params, out.solution);
  out.bounds = dean_bounds(cs, params, sigma, out.norms, opts.korn_constant);
  return out;
}

std::map<std::string, double> dean_norms(const CrossSection& cs, const FlowParams& params, const Solution& w) {
  const QuadField f = evaluate(cs.fe(), w.u);
  const QuadScalar g3 = grad_component_magnitude(f, 2);
  const QuadScalar dw = magnitudes(d_plane(f));
  std::map<std::string, double> n;
  n["grad_w3_l2"] = lq_norm(cs, g3, 2.0, false);
  n["grad_w3_lp"] = lq_norm(cs, g3, params.p, false);
  n["dw_l2"] = lq_norm(cs, dw, 2.0, false);
  n["dw_lp"] = lq_norm(cs, dw, params.p, false);
  n["w2_l2"] = lq_norm(cs, component(f, 1), 2.0, false);
  return n;
}

namespace {

BoundCheck bound(std::string claim, std::string anchor, double lhs, double rhs, double scale, bool korn) {
  BoundCheck b{std::move(claim), std::move(anchor), lhs, rhs, true, korn};
  b.holds = std::isfinite(lhs) && lhs <= rhs + 1e-9 * std::max(std::abs(rhs), scale);
  return b;
}

}  // namespace

std::vector<BoundCheck> dean_bounds(const CrossSection& cs, const FlowParams& params, const SigmaSpec& sigma,
                                    const std::map<std::string, double>& n, double korn_constant) {
  const DeanConstants c = dean_constants(cs, params, sigma, korn_constant);
  const double p = params.p, dl = params.delta, c0 = sigma.c0;
  const double scale = n.at("grad_w3_l2");
  std::vector<BoundCheck> out;
  if (p >= 2.0) {
    const std::string a = "flattened-problem estimates, shear-thickening";
    out.push_back(bound("flat-thick-axial-l2", a, n.at("grad_w3_l2"), c.c1, scale, false));
    out.push_back(bound("flat-thick-axial-lp", a, std::pow(n.at("grad_w3_lp"), p),
                        std::pow(2.0, 0.5 * (p - 2.0)) * c.c1 * c.c1, scale, false));
    out.push_back(bound("flat-thick-secondary-l2", a, n.at("dw_l2"), c0 * c.c2 * dl, scale, false));
    out.push_back(bound("flat-thick-secondary-lp", a, std::pow(n.at("dw_lp"), p), std::pow(c0 * c.c2 * dl, 2.0),
                        scale, false));
    return out;
  }
  if (!c.alpha_admissible || !std::isfinite(c.c4)) return out;
  const std::string a = "flattened-problem estimates, shear-thinning";
  const double base = cs.area + std::pow(c.c4, p);
  out.push_back(bound("flat-thin-axial-lp", a, n.at("grad_w3_lp"), c.c1 * std::pow(base, (2.0 - p) / p), scale,
                      false));
  out.push_back(bound("flat-thin-secondary-lp", a, n.at("dw_lp"),
                      c0 * std::pow(c.c1, sigma.alpha) * c.c2 *
                          std::pow(base, (2.0 - p) * (sigma.alpha + 1.0) / p) * dl,
                      scale, true));
  return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return kNotAvailable;
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return kNotAvailable;
  return (n * sxy - sx * sy) / den;
}

StudyResult dean_scaling_study(const CrossSection& cs, const FlowParams& base, const std::vector<double>& res,
                               const std::vector<double>& deltas, const SolverOptions& opts) {
  StudyResult out;
  std::vector<double> xs, ys;
  for (double re : res)
    for (double dl : deltas) {
      FlowParams prm = base;
      prm.re = re;
      prm.delta = dl;
      const CrossSection c = cs.with_delta(dl);
      const SolveResult r = solve_full(c, prm, opts);
      StudyRow row;
      row.p = prm.p;
      row.re = re;
      row.delta = dl;
      row.de = std::sqrt(dl) * re;
      row.du_l2b = r.report.norms.at("du_l2b");
      row.converged = r.report.converged;
      row.uniqueness_guaranteed = r.report.uniqueness_guaranteed;
      const KappaTable& k = r.report.kappa;
      if (prm.p >= 2.0)
        row.bound_ratio = row.du_l2b / (k.k2 * dl * re);
      else if (std::isfinite(k.k5))
        row.bound_ratio = r.report.norms.at("du_lpb") / (k.k5 * dl * re);
      if (!row.uniqueness_guaranteed) {
        std::ostringstream msg;
        msg << "Re=" << re << " delta=" << dl << " above the uniqueness threshold " << k.re_threshold;
        out.flags.push_back(msg.str());
      }
      out.rows.push_back(row);
      xs.push_back(dl * re);
      ys.push_back(row.du_l2b);
    }
  out.slope_d2 = log_log_slope(xs, ys);
  return out;
}

StudyResult delta_approx_study(const CrossSection& cs, const FlowParams& base, const SigmaSpec& sigma,
                               const std::vector<double>& deltas, const SolverOptions& opts) {
  if (deltas.empty()) throw std::invalid_argument("delta list is empty");
  const double dmax = *std::max_element(deltas.begin(), deltas.end());
  FlowParams top = base;
  top.delta = dmax;
  const KappaTable kt = kappa_constants(cs.with_delta(dmax), top, opts.korn_constant);
  if (std::isfinite(kt.re_threshold) && base.re > 0.5 * kt.re_threshold)
    throw std::invalid_argument("Reynolds number exceeds half of the uniqueness threshold");

  StudyResult out;
  if (base.p < 2.0) {
    const auto [lo, hi] = thinning_alpha_range(base.p);
    if (!(sigma.alpha > lo && sigma.alpha < hi)) {
      std::ostringstream msg;
      msg << "sigma exponent " << sigma.alpha << " outside (" << lo << ", " << hi << ")";
      out.flags.push_back(msg.str());
    }
  }
  std::vector<double> xs, y2, yp;
  for (double dl : deltas) {
    FlowParams prm = base;
    prm.delta = dl;
    const CrossSection c = cs.with_delta(dl);
    const SolveResult u = solve_full(c, prm, opts);
    const DeanResult w = solve_dean(c, prm, sigma, opts);
    VelocityField diff{u.solution.u.coef - w.solution.u.coef};
    const QuadScalar md = magnitudes(d_flat(evaluate(c.fe(), diff)));
    StudyRow row;
    row.p = prm.p;
    row.re = prm.re;
    row.delta = dl;
    row.de = std::sqrt(dl) * prm.re;
    row.du_l2b = u.report.norms.at("du_l2b");
    row.dw_l2 = w.norms.at("dw_l2");
    row.diff_d2 = lq_norm(c, md, 2.0, false);
    row.diff_dp = lq_norm(c, md, prm.p, false);
    row.converged = u.report.converged && w.converged;
    row.uniqueness_guaranteed = u.report.uniqueness_guaranteed;
    out.rows.push_back(row);
    xs.push_back(dl);
    y2.push_back(row.diff_d2);
    yp.push_back(row.diff_dp);
  }
  out.slope_d2 = log_log_slope(xs, y2);
  out.slope_dp = log_log_slope(xs, yp);
  return out;
}

}  // namespace gnf
