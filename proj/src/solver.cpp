#include "gnf/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "assembly.hpp"
#include "gnf/operators.hpp"

namespace gnf {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::picard: return "picard";
    case Scheme::newton: return "newton";
    case Scheme::picard_newton: return "picard-newton";
  }
  return "unknown";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "picard") return Scheme::picard;
  if (s == "newton") return Scheme::newton;
  if (s == "picard-newton") return Scheme::picard_newton;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

std::string to_string(InitialGuess g) {
  switch (g) {
    case InitialGuess::zero: return "zero";
    case InitialGuess::axial_poiseuille: return "poiseuille";
    case InitialGuess::supplied: return "supplied";
  }
  return "unknown";
}

InitialGuess initial_guess_from_string(const std::string& s) {
  if (s == "zero") return InitialGuess::zero;
  if (s == "poiseuille") return InitialGuess::axial_poiseuille;
  if (s == "supplied") return InitialGuess::supplied;
  throw std::invalid_argument("unknown initial guess '" + s + "'");
}

void SolverOptions::validate() const {
  if (!(damping > 0.0 && damping <= 1.0)) throw std::invalid_argument("damping must lie in (0, 1]");
  if (!(rtol >= 0.0) || !(atol >= 0.0)) throw std::invalid_argument("tolerances must be non-negative");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  if (continuation_steps < 0) throw std::invalid_argument("continuation steps must be non-negative");
  if (threads < 1) throw std::invalid_argument("threads must be positive");
  if (!(korn_constant > 0.0)) throw std::invalid_argument("Korn constant must be positive");
}

namespace detail {

DriveResult drive(const FeSpace& fe, const FlowForm& form, Eigen::VectorXd& x, const SolverOptions& opts) {
  DriveResult res;
  SparseSolver lin_solver;
  bool use_newton = opts.scheme == Scheme::newton;
  int picard_steps = 0;
  for (int it = 0; it <= opts.max_iter; ++it) {
    const Linearization lin = use_newton ? Linearization::newton : Linearization::picard;
    Assembled a = assemble(fe, form, x, lin, opts.threads);
    const double rnorm = a.residual.norm();
    const double rel = a.forcing_norm > 0.0 ? rnorm / a.forcing_norm : rnorm;
    if (!res.history.empty() && rel > res.history.back()) res.monotone = false;
    res.history.push_back(rel);
    res.iterations = it;
    if (!std::isfinite(rnorm)) {
      res.message = "residual is not finite";
      return res;
    }
    if (rnorm <= opts.rtol * a.forcing_norm + opts.atol) {
      res.converged = true;
      return res;
    }
    if (it == opts.max_iter) break;
    Eigen::VectorXd dx;
    if (!lin_solver.solve(a.jacobian, -a.residual, dx)) {
      res.message = "linear solve failed";
      return res;
    }
    double omega = opts.damping;
    Eigen::VectorXd trial;
    for (;;) {
      trial = x + omega * dx;
      const double rt = assemble(fe, form, trial, Linearization::none, opts.threads).residual.norm();
      if (std::isfinite(rt) && (rt < (1.0 - 1e-4 * omega) * rnorm || omega <= 1.0 / 64.0)) break;
      omega *= 0.5;
    }
    x = trial;
    if (opts.scheme == Scheme::picard_newton && !use_newton) {
      ++picard_steps;
      if (rel < 1e-3 || picard_steps >= 12) use_newton = true;
    }
  }
  res.message = "iteration limit reached";
  return res;
}

}  // namespace detail

namespace {

Eigen::VectorXd pack(const FeSpace& fe, const Solution& s) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(detail::n_unknowns(fe));
  x.head(3 * fe.n_p2()) = s.u.coef;
  x.segment(3 * fe.n_p2(), fe.n_p1()) = s.pi.coef;
  for (int k = 0; k < fe.n_p2(); ++k)
    if (fe.node_on_boundary(k)) x.segment(3 * k, 3).setZero();
  return x;
}

Solution unpack(const FeSpace& fe, const Eigen::VectorXd& x) {
  return {{x.head(3 * fe.n_p2())}, {x.segment(3 * fe.n_p2(), fe.n_p1())}};
}

detail::FlowForm full_form(const FlowParams& prm) {
  detail::FlowForm f;
  f.curvature = prm.delta;
  f.model = prm.model();
  f.re = prm.re;
  const double g = prm.g;
  f.axial_force = [g](double, double) { return g; };
  return f;
}

}  // namespace

SolveResult solve_full(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                       const Solution* guess) {
  params.validate();
  opts.validate();
  if (std::abs(cs.delta - params.delta) > 1e-15)
    throw std::invalid_argument("cross-section curvature does not match the flow parameters");
  const auto t0 = std::chrono::steady_clock::now();
  const FeSpace& fe = cs.fe();

  Eigen::VectorXd x = Eigen::VectorXd::Zero(detail::n_unknowns(fe));
  switch (opts.initial) {
    case InitialGuess::zero: break;
    case InitialGuess::axial_poiseuille: {
      const ScalarField u3 = axial_only_solve(cs, params, opts);
      for (int k = 0; k < fe.n_p2(); ++k) x[3 * k + 2] = u3.coef[k];
      break;
    }
    case InitialGuess::supplied:
      if (!guess) throw std::invalid_argument("initial guess 'supplied' needs a solution");
      x = pack(fe, *guess);
      break;
  }

  SolveResult out;
  SolveReport& rep = out.report;
  rep.params = params;
  for (int s = 1; s <= opts.continuation_steps; ++s) {
    FlowParams step = params;
    const double t = static_cast<double>(s) / (opts.continuation_steps + 1);
    step.p = 2.0 + t * (params.p - 2.0);
    step.re = t * params.re;
    detail::drive(fe, full_form(step), x, opts);
  }
  const detail::DriveResult d = detail::drive(fe, full_form(params), x, opts);
  rep.converged = d.converged;
  rep.iterations = d.iterations;
  rep.residual_history = d.history;
  rep.monotone = d.monotone;
  rep.message = d.message;
  out.solution = unpack(fe, x);

  rep.kappa = kappa_constants(cs, params, opts.korn_constant);
  rep.uniqueness_guaranteed = params.re < rep.kappa.re_threshold;
  rep.norms = flow_norms(cs, params, out.solution);
  rep.bounds = apriori_bounds(cs, params, rep.norms, opts.korn_constant);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::map<std::string, double> flow_norms(const CrossSection& cs, const FlowParams& params, const Solution& s) {
  const FeSpace& fe = cs.fe();
  const double p = params.p;
  const QuadField f = evaluate(fe, s.u);
  const QuadTensor ds = d_star(cs, f);
  const QuadScalar mds = magnitudes(ds);
  const QuadScalar mdu = magnitudes(d_plane(f));
  const QuadScalar g3 = grad_component_magnitude(f, 2);
  const QuadScalar pi = evaluate(fe, s.pi);
  const PowerLawModel model = params.model();
  QuadScalar energy(f.size()), u3(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    energy[g] = ddot(tau(model, ds[g]), ds[g]);
    u3[g] = f[g].u[2];
  }
  std::map<std::string, double> n;
  n["dstar_l2b"] = weighted_norm(cs, mds, 2.0);
  n["dstar_lpb"] = weighted_norm(cs, mds, p);
  n["grad_u3_l2b"] = weighted_norm(cs, g3, 2.0);
  n["grad_u3_lpb"] = weighted_norm(cs, g3, p);
  n["du_l2b"] = weighted_norm(cs, mdu, 2.0);
  n["du_lpb"] = weighted_norm(cs, mdu, p);
  n["u2_lpb"] = weighted_norm(cs, component(f, 1), p);
  n["pressure_lpc"] = lq_norm(cs, pi, conjugate_exponent(p), false);
  n["energy"] = integral(cs, energy, true);
  n["work"] = params.g * integral(cs, u3, false);
  n["flux"] = integral(cs, u3, false);
  return n;
}

namespace {

BoundCheck make_bound(std::string claim, std::string anchor, double lhs, double rhs, double scale,
                      bool korn) {
  BoundCheck b{std::move(claim), std::move(anchor), lhs, rhs, true, korn};
  // Discrete fields satisfy the bounds up to the nonlinear solver tolerance.
  b.holds = std::isfinite(lhs) && lhs <= rhs + 1e-9 * std::max(std::abs(rhs), scale);
  return b;
}

}  // namespace

std::vector<BoundCheck> apriori_bounds(const CrossSection& cs, const FlowParams& params,
                                       const std::map<std::string, double>& n, double korn_constant) {
  const KappaTable k = kappa_constants(cs, params, korn_constant);
  const double p = params.p, dr = params.delta * params.re;
  const double scale = n.at("dstar_l2b");
  std::vector<BoundCheck> out;
  if (p >= 2.0) {
    const std::string a = "shear-thickening a priori estimates";
    out.push_back(make_bound("thick-dstar-l2", a, n.at("dstar_l2b"), k.k1, scale, false));
    out.push_back(make_bound("thick-dstar-lp", a, n.at("dstar_lpb"), std::pow(k.k1, 2.0 / p), scale, false));
    out.push_back(make_bound("thick-axial-l2", a, n.at("grad_u3_l2b"), std::sqrt(2.0) * k.k1, scale, false));
    out.push_back(make_bound("thick-secondary-l2", a, n.at("du_l2b"), k.k2 * dr, scale, false));
    out.push_back(make_bound("thick-secondary-lp", a, n.at("du_lpb"), std::pow(k.k2 * dr, 2.0 / p), scale, false));
  } else {
    const std::string a = "shear-thinning a priori estimates";
    out.push_back(make_bound("thin-dstar-lp", a, n.at("dstar_lpb"), k.k2, scale, false));
    out.push_back(make_bound("thin-dstar-lp-power", a, std::pow(n.at("dstar_lpb"), p), k.k3, scale, false));
    out.push_back(make_bound("thin-axial-lp", a, n.at("grad_u3_lpb"), k.k4, scale, false));
    if (std::isfinite(k.k5))
      out.push_back(make_bound("thin-secondary-lp", a, n.at("du_lpb"), k.k5 * dr, scale, true));
  }
  return out;
}

PressureEstimate check_pressure_estimate(const CrossSection& cs, const FlowParams& params, const Solution& s) {
  const auto n = flow_norms(cs, params, s);
  const double p = params.p, d = params.delta;
  const double du = n.at("du_lpb"), u2 = n.at("u2_lpb"), g3 = n.at("grad_u3_lpb");
  PressureEstimate e;
  e.lhs = n.at("pressure_lpc");
  const double conv = params.re * (du * du + d * g3 * g3);
  if (p >= 2.0)
    e.bracket = du + d * d * u2 + conv;
  else
    e.bracket = std::pow(du, p - 1.0) + std::pow(d, p) * std::pow(u2, p - 1.0) + conv;
  if (e.bracket > 0.0)
    e.ratio = e.lhs / e.bracket;
  else
    e.ratio = e.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return e;
}

double solution_distance(const CrossSection& cs, const Solution& a, const Solution& b) {
  VelocityField d{a.u.coef - b.u.coef};
  return weighted_norm(cs, magnitudes(d_star(cs, evaluate(cs.fe(), d))), 2.0);
}

}  // namespace gnf
