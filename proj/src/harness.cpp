#include "gnf/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gnf/estimates.hpp"
#include "gnf/operators.hpp"
#include "gnf/parallel.hpp"

namespace gnf {

namespace {

const char* kThickBounds = "shear-thickening a priori estimates";
const char* kThinBounds = "shear-thinning a priori estimates";
const char* kTensorThick = "structural properties of the extra stress, shear-thickening";
const char* kTensorThin = "structural properties of the extra stress, shear-thinning";
const char* kFieldThick = "integrated stress estimates, shear-thickening";
const char* kFieldThin = "integrated stress estimates, shear-thinning";
const char* kDivGap = "toroidal versus flat divergence of the stress";
const char* kTriThick = "trilinear bound, shear-thickening";
const char* kTriThin = "trilinear bound, shear-thinning";
const char* kTriSkew = "convective form vanishes on the diagonal";
const char* kKornId = "Korn identity";
const char* kKornDivFree = "Korn identity for divergence-free fields";
const char* kKornThin = "Korn inequality in L^p";
const char* kGradDom = "toroidal gradient controls the flat gradient";
const char* kPoincare = "Poincare inequality along x1";
const char* kSobolev = "Sobolev inequality";
const char* kSigma = "estimates of the sigma source";

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = {
      {kThickBounds, "bounds on D*u, grad u3 and D u for p >= 2"},
      {kThinBounds, "bounds on D*u, grad u3 and D u for 3/2 <= p < 2"},
      {"flattened-problem estimates, shear-thickening", "bounds on grad w3 and D w for p >= 2"},
      {"flattened-problem estimates, shear-thinning", "bounds on grad w3 and D w for p < 2"},
      {kTensorThick, "continuity, coercivity and monotonicity of tau for p >= 2"},
      {kTensorThin, "continuity, coercivity and monotonicity of tau for p < 2"},
      {kFieldThick, "integrated continuity, coercivity and monotonicity for p >= 2"},
      {kFieldThin, "integrated continuity, coercivity and monotonicity for p < 2"},
      {kDivGap, "div*(tau) - div(tau) bounded in L^{p'}"},
      {kTriThick, "|(u . grad* v, B w)| <= kappa3 product of ||D* .||_{2,B}"},
      {kTriThin, "|(u . grad* v, B w)| <= kappa6 product of ||D* .||_{p,B}"},
      {kTriSkew, "(u . grad* v, B v) = 0 when div(B u) = 0"},
      {kKornId, "||grad* u||^2 = 2||D* u||^2 - ||div(B u)/B||^2 in L2_B"},
      {kKornDivFree, "||grad* u||^2 = 2||D* u||^2 when div(B u) = 0"},
      {kKornThin, "C_K ||grad* u||_{p,B} <= ||D* u||_{p,B}"},
      {kGradDom, "||grad u||_{2,B} <= ||grad* u||_{2,B}"},
      {kPoincare, "||u||_{q,B} <= ||d1 u||_{q,B}"},
      {kSobolev, "||u||_r <= S_{q,r} ||grad u||_q"},
      {kSigma, "|(sigma(u), v)| and ||sigma(u)||_{q'} bounds"},
      {"unidirectional flow when delta Re = 0", "the in-plane velocity vanishes"},
      {"secondary flow when delta Re > 0", "the in-plane velocity does not vanish"},
      {"uniqueness below the Reynolds threshold", "all initial guesses reach the same solution"},
      {"derivative of the extra stress", "tau_jacobian matches central differences"},
  };
  return reg;
}

bool anchor_registered(const std::string& anchor) {
  const auto& reg = claim_registry();
  return std::any_of(reg.begin(), reg.end(), [&](const ClaimInfo& c) { return c.anchor == anchor; });
}

std::string point_label(const FlowParams& prm) {
  std::ostringstream s;
  s << "p=" << format_number(prm.p) << ";delta=" << format_number(prm.delta) << ";re=" << format_number(prm.re)
    << ";g=" << format_number(prm.g);
  return s.str();
}

namespace {

std::vector<VerificationRecord> to_records(const FlowParams& prm, const std::vector<BoundCheck>& bounds) {
  std::vector<VerificationRecord> out;
  const std::string pt = point_label(prm);
  for (const BoundCheck& b : bounds)
    out.push_back({b.claim, b.anchor, pt, b.lhs, b.rhs, b.rhs - b.lhs, b.holds, b.korn_dependent});
  return out;
}

}  // namespace

std::vector<VerificationRecord> verify_apriori(const FlowParams& prm, const SolveReport& report) {
  return to_records(prm, report.bounds);
}

std::vector<VerificationRecord> verify_dean(const FlowParams& prm, const DeanResult& dean) {
  return to_records(prm, dean.bounds);
}

Unidirectionality unidirectional_check(const CrossSection& cs, const Solution& s, double tol) {
  Unidirectionality u;
  u.norm = weighted_norm(cs, magnitudes(d_plane(evaluate(cs.fe(), s.u))), 2.0);
  u.unidirectional = u.norm <= tol;
  return u;
}

bool UniquenessResult::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

UniquenessResult uniqueness_probe(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                                  int n_guesses, std::uint64_t seed) {
  if (n_guesses < 2) throw std::invalid_argument("the probe needs at least two initial guesses");
  UniquenessResult res;
  res.re = params.re;
  res.threshold = kappa_constants(cs, params, opts.korn_constant).re_threshold;
  if (!std::isfinite(res.threshold)) throw std::invalid_argument("no uniqueness threshold for this exponent");
  if (params.re > 0.0 && !(params.re < 0.5 * res.threshold))
    throw std::invalid_argument("Reynolds number must lie below half of the uniqueness threshold");

  const FeSpace& fe = cs.fe();
  std::mt19937_64 rng(seed);
  const ScalarField base = axial_only_solve(cs, params, opts);
  const double amp = 0.5 * base.coef.cwiseAbs().maxCoeff();
  std::vector<Solution> sols;
  for (int i = 0; i < n_guesses; ++i) {
    SolverOptions o = opts;
    SolveResult r;
    if (i == 0) {
      o.initial = InitialGuess::zero;
      res.guesses.push_back("zero");
      r = solve_full(cs, params, o);
    } else {
      Solution g{VelocityField::zero(fe), PressureField::zero(fe)};
      for (int k = 0; k < fe.n_p2(); ++k) g.u.at(k, 2) = base.coef[k];
      if (i == 1) {
        res.guesses.push_back("poiseuille");
      } else {
        g.u.coef += amp * random_velocity(fe, rng).coef;
        res.guesses.push_back("poiseuille+random" + std::to_string(i - 1));
      }
      o.initial = InitialGuess::supplied;
      r = solve_full(cs, params, o, &g);
    }
    res.converged.push_back(r.report.converged);
    sols.push_back(std::move(r.solution));
  }
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = i + 1; j < sols.size(); ++j)
      res.max_distance = std::max(res.max_distance, solution_distance(cs, sols[i], sols[j]));
  return res;
}

SigmaSpec campaign_sigma(double p) {
  if (p >= 2.0) return SigmaSpec::power(1.0, 2.0);
  const auto [lo, hi] = thinning_alpha_range(p);
  return SigmaSpec::power(1.0, 0.5 * (lo + hi));
}

bool CampaignResult::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) { return r.pass; });
}

CampaignResult run_apriori_campaign(const CampaignSpec& spec, const SolverOptions& opts) {
  if (spec.ps.empty() || spec.deltas.empty() || spec.re_factors.empty() || spec.gs.empty())
    throw std::invalid_argument("campaign grid is empty");
  const CrossSection base = build_cross_section(spec.shape, 0.0, spec.h);
  struct Point {
    FlowParams prm;
  };
  std::vector<Point> pts;
  for (double p : spec.ps)
    for (double d : spec.deltas)
      for (double f : spec.re_factors)
        for (double g : spec.gs) {
          FlowParams prm;
          prm.p = p;
          prm.delta = d;
          prm.g = g;
          if (f > 0.0) {
            const double thr = kappa_constants(base.with_delta(d), prm, opts.korn_constant).re_threshold;
            if (!std::isfinite(thr)) continue;
            prm.re = f * thr;
          }
          pts.push_back({prm});
        }

  struct Out {
    std::vector<VerificationRecord> records;
    int unconverged = 0;
    std::vector<std::string> notes;
  };
  std::vector<Out> outs(pts.size());
  SolverOptions inner = opts;
  inner.threads = 1;
  parallel_for(static_cast<int>(pts.size()), opts.threads, [&](int b, int e) {
    for (int i = b; i < e; ++i) {
      const FlowParams& prm = pts[i].prm;
      const CrossSection cs = base.with_delta(prm.delta);
      Out& o = outs[i];
      if (spec.full) {
        const SolveResult r = solve_full(cs, prm, inner);
        if (r.report.converged) {
          auto rec = verify_apriori(prm, r.report);
          o.records.insert(o.records.end(), rec.begin(), rec.end());
        } else {
          ++o.unconverged;
          o.notes.push_back("full solve did not converge at " + point_label(prm));
        }
      }
      if (spec.dean) {
        const DeanResult w = solve_dean(cs, prm, campaign_sigma(prm.p), inner);
        if (w.converged) {
          auto rec = verify_dean(prm, w);
          o.records.insert(o.records.end(), rec.begin(), rec.end());
        } else {
          ++o.unconverged;
          o.notes.push_back("flattened solve did not converge at " + point_label(prm));
        }
      }
    }
  });
  CampaignResult res;
  res.points = static_cast<int>(pts.size());
  for (Out& o : outs) {
    res.records.insert(res.records.end(), o.records.begin(), o.records.end());
    res.unconverged += o.unconverged;
    res.notes.insert(res.notes.end(), o.notes.begin(), o.notes.end());
  }
  std::stable_sort(res.records.begin(), res.records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) { return a.claim < b.claim; });
  return res;
}

long FuzzSummary::violations(bool include_conditional) const {
  long v = 0;
  for (const FuzzEntry& e : entries)
    if (include_conditional || !e.conditional) v += e.violations;
  return v;
}

void FuzzSummary::append(const FuzzSummary& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }

SymTensor3 random_tensor(std::mt19937_64& rng, double amplitude) {
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  SymTensor3 t;
  for (double& c : t.c) c = u(rng);
  return t;
}

VelocityField random_velocity(const FeSpace& fe, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VelocityField f = VelocityField::zero(fe);
  for (int k = 0; k < fe.n_p2(); ++k)
    for (int c = 0; c < 3; ++c) {
      const double v = u(rng);  // drawn for every node so the stream does not depend on the boundary
      if (!fe.node_on_boundary(k)) f.at(k, c) = v;
    }
  return f;
}

QuadField random_div_free_field(const CrossSection& cs, std::mt19937_64& rng) {
  if (cs.shape.kind != ShapeKind::disk) throw std::invalid_argument("divergence-free fields need the unit disk");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double c[6], e[3];
  for (double& v : c) v = u(rng);
  for (double& v : e) v = u(rng);
  const double dl = cs.delta;
  // chi = b^2 g with b = 1 - |x|^2 and g quadratic; u3 = b (e0 + e1 x + e2 y).
  return sample(cs.fe(), [=](double x, double y) {
    const double b = 1.0 - x * x - y * y, bx = -2.0 * x, by = -2.0 * y, bxx = -2.0, byy = -2.0;
    const double g = c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + c[5] * y * y;
    const double gx = c[1] + 2.0 * c[3] * x + c[4] * y, gy = c[2] + c[4] * x + 2.0 * c[5] * y;
    const double gxx = 2.0 * c[3], gxy = c[4], gyy = 2.0 * c[5];
    const double chi = b * b * g;
    const double cx = 2.0 * b * bx * g + b * b * gx;
    const double cy = 2.0 * b * by * g + b * b * gy;
    const double cxx = 2.0 * (bx * bx + b * bxx) * g + 4.0 * b * bx * gx + b * b * gxx;
    const double cyy = 2.0 * (by * by + b * byy) * g + 4.0 * b * by * gy + b * b * gyy;
    const double cxy = 2.0 * bx * by * g + 2.0 * b * bx * gy + 2.0 * b * by * gx + b * b * gxy;
    const double B = 1.0 + dl * y;
    PointValue v;
    v.u[0] = 2.0 * dl * chi + B * cy;
    v.u[1] = -B * cx;
    const double h = e[0] + e[1] * x + e[2] * y;
    v.u[2] = b * h;
    v.du[0][0] = 2.0 * dl * cx + B * cxy;
    v.du[1][0] = 3.0 * dl * cy + B * cyy;
    v.du[0][1] = -B * cxx;
    v.du[1][1] = -dl * cx - B * cxy;
    v.du[0][2] = bx * h + b * e[1];
    v.du[1][2] = by * h + b * e[2];
    return v;
  });
}

namespace {

class Tally {
 public:
  FuzzEntry& entry(const std::string& claim, const std::string& anchor, const std::string& point, bool cond,
                   double start) {
    for (FuzzEntry& e : s_.entries)
      if (e.claim == claim && e.point == point) return e;
    s_.entries.push_back({claim, anchor, point, 0, 0, start, cond});
    return s_.entries.back();
  }

  // Inequality: margin is the relative slack, violated below -tol.
  void inequality(const std::string& anchor, const std::string& point, const InequalityCheck& c, double tol,
                  bool cond = false) {
    FuzzEntry& e = entry(c.name, anchor, point, cond, std::numeric_limits<double>::infinity());
    ++e.samples;
    const double m = std::isfinite(c.slack) ? c.slack : -std::numeric_limits<double>::infinity();
    if (!(m >= -tol)) ++e.violations;
    e.worst = std::min(e.worst, m);
  }

  // Identity: worst is the largest relative residual.
  void identity(const std::string& claim, const std::string& anchor, const std::string& point, double residual,
                double tol) {
    FuzzEntry& e = entry(claim, anchor, point, false, 0.0);
    ++e.samples;
    if (!(residual < tol)) ++e.violations;
    e.worst = std::max(e.worst, residual);
  }

  FuzzSummary take() { return std::move(s_); }

 private:
  FuzzSummary s_;
};

std::string label(const char* key, double v) { return std::string(key) + "=" + format_number(v); }

}  // namespace

FuzzSummary fuzz_tensors(std::uint64_t seed, int n, const std::vector<double>& ps) {
  Tally t;
  for (double p : ps) {
    std::mt19937_64 rng(seed);
    const PowerLawModel m{p, 1.0};
    const std::string pt = label("p", p);
    for (int i = 0; i < n; ++i) {
      const SymTensor3 a = random_tensor(rng, 5.0), b = random_tensor(rng, 5.0);
      if (p >= 2.0)
        for (const auto& c : check_thickening_properties(m, a, b)) t.inequality(kTensorThick, pt, c, kSlackFloor);
      else
        for (const auto& c : check_thinning_properties(m, a, b)) t.inequality(kTensorThin, pt, c, kSlackFloor);
    }
  }
  return t.take();
}

FuzzSummary fuzz_korn(std::uint64_t seed, int n, const std::vector<double>& deltas, double h, double korn_constant) {
  Tally t;
  const CrossSection base = build_cross_section(ShapeSpec::unit_disk(), 0.0, h);
  for (double d : deltas) {
    const CrossSection cs = base.with_delta(d);
    std::mt19937_64 rng(seed);
    const std::string pt = label("delta", d);
    for (int i = 0; i < n; ++i) {
      const QuadField f = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      t.identity("korn-identity", kKornId, pt, korn_identity(cs, f).residual, kIdentityTolerance);
      t.identity("korn-expansion", kKornId, pt, korn_expansion(cs, f).residual, kIdentityTolerance);
      t.inequality(kGradDom, pt, grad_star_dominates(cs, f), kQuadratureSlack);
      for (double p : {1.5, 1.75})
        t.inequality(kKornThin, pt + ";" + label("p", p), korn_thin_check(cs, f, p, korn_constant),
                     kQuadratureSlack, true);

      const QuadField s = random_div_free_field(cs, rng);
      t.identity("korn-div-free", kKornDivFree, pt, korn_div_free(cs, s).residual, kIdentityTolerance);
      const double dv = weighted_norm(cs, weighted_divergence(cs, s), 2.0) /
                        weighted_norm(cs, grad_star_magnitude(cs, s), 2.0);
      t.identity("div-free-residual", kKornDivFree, pt, dv, kIdentityTolerance);
      const QuadField v = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      const double scale = weighted_norm(cs, vector_magnitude(s), 4.0) *
                           weighted_norm(cs, grad_star_magnitude(cs, v), 2.0) *
                           weighted_norm(cs, vector_magnitude(v), 4.0);
      t.identity("convective-skew", kTriSkew, pt, std::abs(trilinear_star(cs, s, v, v)) / scale, kIdentityTolerance);
    }
  }
  return t.take();
}

FuzzSummary fuzz_poincare(std::uint64_t seed, int n, const std::vector<double>& deltas, double h) {
  Tally t;
  const CrossSection base = build_cross_section(ShapeSpec::unit_disk(), 0.0, h);
  for (double d : deltas) {
    const CrossSection cs = base.with_delta(d);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
      const QuadField f = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      for (double q : {1.5, 2.0, 3.0}) {
        const double rhs = weighted_norm(cs, dx1_magnitude(f), q);
        InequalityCheck c = check_le("poincare", rhs - poincare_residual(cs, f, q), rhs);
        t.inequality(kPoincare, label("delta", d) + ";" + label("q", q), c, kQuadratureSlack);
      }
    }
  }
  return t.take();
}

FuzzSummary fuzz_sobolev(std::uint64_t seed, int n, double h) {
  Tally t;
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, h);
  const std::vector<std::pair<double, double>> qr = {{1.5, 1.2}, {1.5, 3.0}, {1.5, 6.0}, {1.75, 7.0},
                                                     {2.0, 2.0}, {2.0, 4.0}, {3.0, 3.0}, {3.0, 6.0}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    const QuadField f = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
    for (const auto& [q, r] : qr)
      t.inequality(kSobolev, label("q", q) + ";" + label("r", r), sobolev_check(cs, f, q, r), kQuadratureSlack);
  }
  return t.take();
}

FuzzSummary fuzz_sigma(std::uint64_t seed, int n, double h) {
  Tally t;
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, h);
  struct Case {
    SigmaSpec sigma;
    double q;
  };
  const std::vector<Case> cases = {{SigmaSpec::dean(1.0), 2.0},        {SigmaSpec::dean(1.0), 3.0},
                                   {SigmaSpec::dean(1.0), 1.5},        {SigmaSpec::power(1.0, 2.0 / 3.0), 1.5},
                                   {SigmaSpec::power(2.0, 0.5), 1.75}, {SigmaSpec::power(1.0, 1.5), 2.5}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    const QuadField u = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
    const QuadField v = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
    for (const Case& c : cases) {
      const std::string pt = to_string(c.sigma.kind) + ";" + label("alpha", c.sigma.alpha) + ";" + label("q", c.q);
      for (const auto& chk : sigma_estimate_checks(cs, c.sigma, c.q, u, v))
        t.inequality(kSigma, pt, chk, kQuadratureSlack);
    }
  }
  return t.take();
}

FuzzSummary fuzz_field_estimates(std::uint64_t seed, int n, const std::vector<double>& ps,
                                 const std::vector<double>& deltas, double h, double korn_constant) {
  Tally t;
  const CrossSection base = build_cross_section(ShapeSpec::unit_disk(), 0.0, h);
  for (double d : deltas) {
    const CrossSection cs = base.with_delta(d);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
      const QuadField u = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      const QuadField v = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      const QuadField w = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
      const QuadTensor du = d_star(cs, u), dv = d_star(cs, v);
      const std::string pd = label("delta", d);
      t.inequality(kTriThick, pd, trilinear_bound_thick(cs, u, v, w), kQuadratureSlack);
      for (double p : ps) {
        const std::string pt = pd + ";" + label("p", p);
        if (p >= 2.0) {
          for (const auto& c : tensor_field_estimates_thick(cs, p, du, dv))
            t.inequality(kFieldThick, pt, c, kQuadratureSlack);
        } else {
          for (const auto& c : tensor_field_estimates_thin(cs, p, du, dv))
            t.inequality(kFieldThin, pt, c, kQuadratureSlack);
          t.inequality(kTriThin, pt, trilinear_bound_thin(cs, p, korn_constant, u, v, w), kQuadratureSlack, true);
        }
        t.inequality(kDivGap, pt, divergence_gap_check(cs, p, du), kQuadratureSlack);
      }
    }
  }
  return t.take();
}

FuzzSummary fuzz_inequalities(std::uint64_t seed, const std::vector<double>& ps, const FuzzOptions& opts) {
  FuzzSummary s = fuzz_tensors(seed, opts.n_tensors, ps);
  s.append(fuzz_korn(seed, opts.n_fields, opts.deltas, opts.h));
  s.append(fuzz_poincare(seed, opts.n_fields, opts.deltas, opts.h));
  s.append(fuzz_sobolev(seed, opts.n_fields, opts.h));
  s.append(fuzz_sigma(seed, opts.n_fields, opts.h));
  s.append(fuzz_field_estimates(seed, opts.n_fields, ps, opts.deltas, opts.h));
  return s;
}

std::vector<double> jacobian_orders(std::uint64_t seed, int n, double p, const std::vector<double>& steps) {
  const PowerLawModel m{p, 1.0};
  std::mt19937_64 rng(seed);
  std::vector<double> orders;
  for (int i = 0; i < n; ++i) {
    const SymTensor3 eta = random_tensor(rng, 5.0), xi = random_tensor(rng, 5.0);
    const SymTensor3 j = tau_jacobian(m, eta, xi);
    std::vector<double> errs;
    for (double hs : steps) {
      const SymTensor3 fd = (0.5 / hs) * (tau(m, eta + hs * xi) - tau(m, eta - hs * xi));
      errs.push_back(norm(fd - j));
    }
    orders.push_back(log_log_slope(steps, errs));
  }
  return orders;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string records_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream s;
  s << "claim,anchor,point,lhs,rhs,margin,pass,conditional\n";
  for (const auto& r : records)
    s << r.claim << ',' << quoted(r.anchor) << ',' << r.point << ',' << format_number(r.lhs) << ','
      << format_number(r.rhs) << ',' << format_number(r.margin) << ',' << (r.pass ? 1 : 0) << ','
      << (r.conditional ? 1 : 0) << '\n';
  return s.str();
}

std::string fuzz_csv(const FuzzSummary& sum) {
  std::ostringstream s;
  s << "claim,anchor,point,samples,violations,worst,conditional\n";
  for (const auto& e : sum.entries)
    s << e.claim << ',' << quoted(e.anchor) << ',' << e.point << ',' << e.samples << ',' << e.violations << ','
      << format_number(e.worst) << ',' << (e.conditional ? 1 : 0) << '\n';
  return s.str();
}

std::string study_csv(const StudyResult& st) {
  std::ostringstream s;
  s << "p,re,delta,de,norm_Du_2B,norm_Dw_2,diff_D2,diff_Dp,bound_ratio,slope_D2,slope_Dp,converged,unique\n";
  for (const auto& r : st.rows)
    s << format_number(r.p) << ',' << format_number(r.re) << ',' << format_number(r.delta) << ','
      << format_number(r.de) << ',' << format_number(r.du_l2b) << ',' << format_number(r.dw_l2) << ','
      << format_number(r.diff_d2) << ',' << format_number(r.diff_dp) << ',' << format_number(r.bound_ratio) << ','
      << format_number(st.slope_d2) << ',' << format_number(st.slope_dp) << ',' << (r.converged ? 1 : 0) << ','
      << (r.uniqueness_guaranteed ? 1 : 0) << '\n';
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace gnf
