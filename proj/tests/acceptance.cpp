// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. CSV artifacts go to $GNF_OUT_DIR (default
// acceptance_out).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gnf/dean.hpp"
#include "gnf/harness.hpp"
#include "gnf/operators.hpp"

using namespace gnf;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kH = 0.05;  // 2400 triangles on the unit disk

std::string out_dir() {
  const char* e = std::getenv("GNF_OUT_DIR");
  return e && *e ? e : "acceptance_out";
}

std::string out(const std::string& name) { return (std::filesystem::path(out_dir()) / name).string(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <class F>
void criterion(int id, const char* title, F&& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d %s  %s: %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), s);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char b[128];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

FlowParams params(double p, double delta, double re, double g = 1.0) {
  FlowParams f;
  f.p = p;
  f.delta = delta;
  f.re = re;
  f.g = g;
  return f;
}

const CrossSection& disk() {
  static const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, kH);
  return cs;
}

double rate(double p) {
  if (p == 2.0) return 1.0;
  if (p > 2.0) return conjugate_exponent(p) / p;
  return p - 1.0;
}

}  // namespace

int main() {
  std::printf("mesh: unit disk, h = %g, %d triangles\n", kH, disk().fe().n_cells());
  const SolverOptions opts;

  criterion(1, "tensor inequality suite", [] {
    const std::vector<double> ps{1.5, 1.75, 2.0, 2.5, 3.0, 4.0};
    const FuzzSummary s = fuzz_tensors(kSeed, 10000, ps);
    write_text(out("criterion1_tensors.csv"), fuzz_csv(s));
    long samples = 0;
    for (const auto& e : s.entries) samples += e.samples;
    // Same pairs against the continuity constant of S = tau / 2.
    long half = 0;
    for (double p : ps) {
      std::mt19937_64 rng(kSeed);
      for (int i = 0; i < 10000; ++i) {
        const SymTensor3 a = random_tensor(rng, 5.0), b = random_tensor(rng, 5.0);
        if (!continuity_without_factor_two({p, 1.0}, a, b).holds) ++half;
      }
    }
    return Outcome{s.violations() == 0, std::to_string(s.violations()) + " violations in " +
                                            std::to_string(samples) + " checks; constants without the factor 2 " +
                                            "would fail " + std::to_string(half) + " of 60000 continuity checks"};
  });

  criterion(2, "Jacobian against central differences", [] {
    double lo = 1e300, hi = -1e300;
    for (double p : {1.5, 3.0})
      for (double o : jacobian_orders(kSeed, 100, p, {1e-2, 1e-3, 1e-4})) {
        lo = std::min(lo, o);
        hi = std::max(hi, o);
      }
    return Outcome{lo >= 1.8 && hi <= 2.2, "observed orders in [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "]"};
  });

  criterion(3, "Korn identity", [] {
    const FuzzSummary s = fuzz_korn(kSeed, 100, {0.0, 0.3, 0.7}, kH);
    write_text(out("criterion3_korn.csv"), fuzz_csv(s));
    double worst_id = 0.0, worst_free = 0.0;
    long bad = 0;
    for (const auto& e : s.entries) {
      if (e.claim == "korn-identity" || e.claim == "korn-expansion") worst_id = std::max(worst_id, e.worst);
      if (e.claim == "korn-div-free") worst_free = std::max(worst_free, e.worst);
      if (e.claim == "korn-identity" || e.claim == "korn-expansion" || e.claim == "korn-div-free") bad += e.violations;
    }
    const bool ok = bad == 0 && worst_id < 1e-6 && worst_free < 1e-6;
    return Outcome{ok, "max residual " + fmt("%.2e", worst_id) + " on random fields, " + fmt("%.2e", worst_free) +
                           " on divergence-free fields (tolerance 1e-6)"};
  });

  criterion(4, "Poiseuille oracle", [] {
    std::vector<double> hs, errs;
    double du = 0.0, pi = 0.0;
    bool conv = true;
    for (int n : {8, 16, 32}) {
      const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 1.0 / n);
      const SolveResult r = solve_full(cs, params(2.0, 0.0, 0.0), SolverOptions{});
      conv = conv && r.report.converged;
      const QuadField f = evaluate(cs.fe(), r.solution.u);
      QuadScalar e(f.size());
      for (std::size_t g = 0; g < f.size(); ++g) {
        const auto& q = cs.fe().qp(static_cast<int>(g));
        e[g] = f[g].u[2] - 0.25 * (1.0 - q.x1 * q.x1 - q.x2 * q.x2);
      }
      hs.push_back(1.0 / n);
      errs.push_back(lq_norm(cs, e, 2.0, false));
      du = std::max(du, r.report.norms.at("du_l2b"));
      pi = std::max(pi, r.report.norms.at("pressure_lpc"));
    }
    const double order = log_log_slope(hs, errs);
    return Outcome{conv && order >= 2.5 && du < 1e-10 && pi < 1e-8,
                   "L2 errors " + fmt("%.2e", errs[0]) + ", " + fmt("%.2e", errs[1]) + ", " + fmt("%.2e", errs[2]) +
                       ", order " + fmt("%.3f", order) + ", ||Du|| " + fmt("%.1e", du) + ", ||pi|| " +
                       fmt("%.1e", pi)};
  });

  criterion(5, "unidirectionality dichotomy", [&] {
    double zero_max = 0.0, pos_min = 1e300;
    bool conv = true;
    for (double p : {1.5, 2.0, 3.0}) {
      for (auto [d, re] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.0, 50.0}, {0.2, 0.0}}) {
        const CrossSection cs = disk().with_delta(d);
        const SolveResult r = solve_full(cs, params(p, d, re), opts);
        conv = conv && r.report.converged;
        zero_max = std::max(zero_max, unidirectional_check(cs, r.solution, 1e-8).norm);
      }
      for (auto [d, re] : std::vector<std::pair<double, double>>{{0.1, 50.0}, {0.3, 20.0}}) {
        const CrossSection cs = disk().with_delta(d);
        const SolveResult r = solve_full(cs, params(p, d, re), opts);
        conv = conv && r.report.converged;
        pos_min = std::min(pos_min, unidirectional_check(cs, r.solution, 1e-8).norm);
      }
    }
    return Outcome{conv && zero_max < 1e-8 && pos_min > 1e-4,
                   "max ||Du||_{2,B} with delta Re = 0: " + fmt("%.1e", zero_max) + ", min with delta Re > 0: " +
                       fmt("%.3e", pos_min)};
  });

  criterion(6, "a priori bounds on the full problem", [&] {
    CampaignSpec spec;
    spec.h = kH;
    spec.seed = kSeed;
    const CampaignResult r = run_apriori_campaign(spec, opts);
    write_text(out("criterion6_apriori.csv"), records_csv(r.records));
    long passed = std::count_if(r.records.begin(), r.records.end(), [](const auto& x) { return x.pass; });
    return Outcome{r.all_pass() && !r.records.empty(),
                   std::to_string(passed) + "/" + std::to_string(r.records.size()) + " records pass over " +
                       std::to_string(r.points) + " points, " + std::to_string(r.unconverged) + " unconverged"};
  });

  criterion(7, "Dean scaling", [&] {
    const StudyResult s = dean_scaling_study(disk(), params(2.0, 0.0, 5.0), {5.0}, {0.2, 0.1, 0.05, 0.025}, opts);
    write_text(out("criterion7_dean.csv"), study_csv(s));
    double worst = 0.0;
    bool conv = true;
    for (const auto& r : s.rows) {
      worst = std::max(worst, r.bound_ratio);
      conv = conv && r.converged;
    }
    return Outcome{conv && s.slope_d2 >= 0.9 && s.slope_d2 <= 1.1 && worst <= 1.0,
                   "slope " + fmt("%.4f", s.slope_d2) + ", max ||Du||_{2,B} / (kappa2 delta Re) " + fmt("%.3e", worst)};
  });

  criterion(8, "delta-approximation rates", [&] {
    const std::vector<double> deltas{0.2, 0.1, 0.05, 0.025};
    std::string detail;
    bool ok = true;
    for (double p : {2.0, 3.0, 1.5}) {
      FlowParams prm = params(p, 0.2, 0.0);
      prm.re = 0.25 * kappa_constants(disk().with_delta(0.2), prm).re_threshold;
      const StudyResult s = delta_approx_study(disk(), prm, SigmaSpec::dean(prm.re), deltas, opts);
      write_text(out("criterion8_delta_p" + fmt("%g", p) + ".csv"), study_csv(s));
      const double order = p == 2.0 ? s.slope_d2 : s.slope_dp;
      bool conv = std::all_of(s.rows.begin(), s.rows.end(), [](const auto& r) { return r.converged; });
      ok = ok && conv && order >= rate(p) - 0.1;
      detail += (detail.empty() ? "" : "; ") + std::string("p=") + fmt("%g", p) + " order " + fmt("%.3f", order) +
                " (needs " + fmt("%.2f", rate(p) - 0.1) + ")";
      for (const auto& f : s.flags) detail += ", flagged: " + f;
    }
    return Outcome{ok, detail};
  });

  criterion(9, "uniqueness probe", [&] {
    double worst = 0.0;
    bool conv = true;
    for (double p : {1.5, 2.0, 3.0}) {
      FlowParams prm = params(p, 0.1, 0.0);
      const CrossSection cs = disk().with_delta(0.1);
      prm.re = 0.4 * kappa_constants(cs, prm).re_threshold;
      const UniquenessResult u = uniqueness_probe(cs, prm, opts, 4, kSeed);
      conv = conv && u.all_converged();
      worst = std::max(worst, u.max_distance);
    }
    return Outcome{conv && worst < 1e-6, "max pairwise ||D*(ui - uj)||_{2,B} " + fmt("%.2e", worst)};
  });

  criterion(10, "flattened-problem bounds", [&] {
    CampaignSpec spec;
    spec.h = kH;
    spec.seed = kSeed;
    spec.full = false;
    spec.dean = true;
    const CampaignResult r = run_apriori_campaign(spec, opts);
    write_text(out("criterion10_flattened.csv"), records_csv(r.records));
    const long passed = std::count_if(r.records.begin(), r.records.end(), [](const auto& x) { return x.pass; });
    double pos_min = 1e300, zero_max = 0.0;
    for (double p : {1.5, 2.0, 3.0}) {
      for (auto [d, re] : std::vector<std::pair<double, double>>{{0.1, 50.0}, {0.3, 20.0}}) {
        const DeanResult w = solve_dean(disk().with_delta(d), params(p, d, re), SigmaSpec::dean(re), opts);
        pos_min = std::min(pos_min, w.converged ? w.norms.at("dw_l2") : 0.0);
      }
      const DeanResult z = solve_dean(disk(), params(p, 0.0, 50.0), SigmaSpec::dean(50.0), opts);
      zero_max = std::max(zero_max, z.norms.at("dw_l2"));
    }
    const bool ok = r.all_pass() && !r.records.empty() && r.unconverged == 0 && pos_min > 1e-4 && zero_max < 1e-8;
    return Outcome{ok, std::to_string(passed) + "/" + std::to_string(r.records.size()) + " records pass, " +
                           std::to_string(r.unconverged) + " unconverged; min ||Dw||_2 for delta > 0 " +
                           fmt("%.3e", pos_min) + ", max for delta = 0 " + fmt("%.1e", zero_max)};
  });

  criterion(11, "reproducibility", [&] {
    SolverOptions one = opts;
    one.threads = 1;
    const auto tensors = [] { return fuzz_csv(fuzz_tensors(kSeed, 2000, {1.5, 3.0})); };
    const auto korn = [] { return fuzz_csv(fuzz_korn(kSeed, 10, {0.3}, kH)); };
    const auto dean = [&] {
      return study_csv(dean_scaling_study(disk(), params(2.0, 0.0, 5.0), {5.0}, {0.2, 0.1}, one));
    };
    const auto campaign = [&] {
      CampaignSpec spec;
      spec.h = kH;
      spec.ps = {1.5, 3.0};
      spec.deltas = {0.3};
      spec.gs = {1.0};
      spec.dean = true;
      return records_csv(run_apriori_campaign(spec, one).records);
    };
    const auto probe = [&] {
      FlowParams prm = params(3.0, 0.1, 0.0);
      const CrossSection cs = disk().with_delta(0.1);
      prm.re = 0.4 * kappa_constants(cs, prm).re_threshold;
      return format_number(uniqueness_probe(cs, prm, one, 4, kSeed).max_distance);
    };
    int same = 0, total = 0;
    const std::vector<std::function<std::string()>> runs{tensors, korn, dean, campaign, probe};
    for (const auto& run : runs) {
      ++total;
      if (run() == run()) ++same;
    }
    return Outcome{same == total, std::to_string(same) + "/" + std::to_string(total) + " outputs byte-identical"};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
