// Command-line driver: solve, verify, study and mesh subcommands.
// Exit status: 0 pass, 1 computational failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>

#include "gnf/config.hpp"
#include "gnf/dean.hpp"
#include "gnf/harness.hpp"
#include "gnf/output.hpp"

using namespace gnf;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag name -> config key. Values are kept as text and run through the
// config parser so flags and files share one validation path.
const std::vector<std::pair<std::string, std::string>> kFlags = {
    {"--p", "p"},
    {"--delta,--deltas", "delta"},
    {"--re", "re"},
    {"--g", "g"},
    {"--gamma-dot", "gamma_dot"},
    {"--shape", "shape"},
    {"--a", "rect_a"},
    {"--b", "rect_b"},
    {"--mesh", "mesh_file"},
    {"--h", "h"},
    {"--scheme", "scheme"},
    {"--damping", "damping"},
    {"--rtol", "rtol"},
    {"--atol", "atol"},
    {"--max-iter", "max_iter"},
    {"--initial", "initial"},
    {"--continuation", "continuation"},
    {"--korn-constant", "korn_constant"},
    {"--threads", "threads"},
    {"--sigma", "sigma"},
    {"--sigma-c0", "sigma_c0"},
    {"--sigma-alpha", "sigma_alpha"},
    {"--n", "n"},
    {"--seed", "seed"},
    {"--grid", "grid"},
    {"--out", "out_dir"},
};

struct Invocation {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  bool dry_run = false;
  int guesses = 4;

  void attach(CLI::App* app) {
    for (const auto& [flag, key] : kFlags) options[key] = app->add_option(flag, values[key], key);
    app->add_option("--config", config_path, "key = value file; flags override it");
    app->add_flag("--dry-run", dry_run, "print the resolved configuration and exit");
  }

  bool given(const std::string& key) const { return options.at(key)->count() > 0; }

  RunConfig resolve(const std::string& command) const {
    RunConfig c;
    if (!config_path.empty()) c = load_config(config_path, c);
    std::string text;
    for (const auto& [flag, key] : kFlags)
      if (given(key)) text += key + " = " + values.at(key) + "\n";
    c = parse_config(text, c);
    c.command = command;
    if (const char* env = std::getenv("GNF_OUT_DIR"); env && *env) c.out_dir = env;
    c.validate();
    return c;
  }
};

std::string out_path(const RunConfig& c, const std::string& name) {
  return (std::filesystem::path(c.out_dir) / name).string();
}

void print_bounds(const std::vector<BoundCheck>& bounds) {
  for (const auto& b : bounds)
    std::printf("  %-26s %.6e <= %.6e  %s%s\n", b.claim.c_str(), b.lhs, b.rhs, b.holds ? "ok" : "FAIL",
                b.korn_dependent ? "  (conditional on the Korn constant)" : "");
}

int cmd_solve(const RunConfig& c) {
  const FlowParams prm = c.first_params();
  const CrossSection cs = build_cross_section(c.shape, prm.delta, c.h);
  const SolveResult r = solve_full(cs, prm, c.solver);
  write_text(out_path(c, "solution.vtk"), vtk_text(cs, r.solution));
  write_text(out_path(c, "solution.coef"), coefficients_text(r.solution));
  write_text(out_path(c, "report.json"), report_json(cs, r.report, c.solver));
  const Unidirectionality u = unidirectional_check(cs, r.solution, 1e-8);
  std::printf("cells %d, converged %s after %d iterations (%.2f s)\n", cs.fe().n_cells(),
              r.report.converged ? "yes" : "no", r.report.iterations, r.report.seconds);
  for (const auto& [k, v] : r.report.norms) std::printf("  %-14s %.10e\n", k.c_str(), v);
  std::printf("secondary flow ||D u||_{2,B} = %.3e (%s)\n", u.norm,
              u.unidirectional ? "unidirectional" : "not unidirectional");
  std::printf("uniqueness threshold %.6e, guaranteed %s\n", r.report.kappa.re_threshold,
              r.report.uniqueness_guaranteed ? "yes" : "no");
  print_bounds(r.report.bounds);
  if (!r.report.converged) {
    std::fprintf(stderr, "solve did not converge: %s\n", r.report.message.c_str());
    return 1;
  }
  for (const auto& b : r.report.bounds)
    if (!b.holds) return 1;
  return 0;
}

int report_fuzz(const RunConfig& c, const std::string& name, const FuzzSummary& s) {
  write_text(out_path(c, "verify_" + name + ".csv"), fuzz_csv(s));
  for (const auto& e : s.entries)
    std::printf("  %-20s %-26s samples %-7ld violations %-5ld worst %.3e%s\n", e.claim.c_str(), e.point.c_str(),
                e.samples, e.violations, e.worst, e.conditional ? " (conditional)" : "");
  const long v = s.violations();
  std::printf("%ld violation(s), %ld in conditional checks\n", v, s.violations(true) - v);
  return v == 0 ? 0 : 1;
}

int cmd_verify(const std::string& what, const RunConfig& c, const Invocation& inv) {
  const auto list_or = [&](const char* key, const std::vector<double>& cfg, std::vector<double> def) {
    return inv.given(key) ? cfg : def;
  };
  if (what == "tensors")
    return report_fuzz(c, what,
                       fuzz_tensors(c.seed, inv.given("n") ? c.n : 10000,
                                    list_or("p", c.p, {1.5, 1.75, 2.0, 2.5, 3.0, 4.0})));
  const std::vector<double> deltas = list_or("delta", c.delta, {0.0, 0.3, 0.7});
  if (what == "korn") return report_fuzz(c, what, fuzz_korn(c.seed, c.n, deltas, c.h, c.solver.korn_constant));
  if (what == "poincare") return report_fuzz(c, what, fuzz_poincare(c.seed, c.n, deltas, c.h));
  if (what == "sobolev") return report_fuzz(c, what, fuzz_sobolev(c.seed, c.n, c.h));
  if (what == "sigma") return report_fuzz(c, what, fuzz_sigma(c.seed, c.n, c.h));
  // apriori
  CampaignSpec spec;
  spec.shape = c.shape;
  spec.h = c.h;
  spec.dean = true;
  spec.seed = c.seed;
  if (c.grid != "default") {
    if (c.grid != "custom") throw UsageError("grid must be 'default' or 'custom'");
    spec.ps = c.p;
    spec.deltas = c.delta;
    spec.re_factors = c.re;  // multiples of the uniqueness threshold
    spec.gs = c.g;
  }
  const CampaignResult r = run_apriori_campaign(spec, c.solver);
  write_text(out_path(c, "verify_apriori.csv"), records_csv(r.records));
  long failed = 0;
  for (const auto& rec : r.records)
    if (!rec.pass) {
      ++failed;
      std::printf("  FAIL %s at %s: %.6e > %.6e\n", rec.claim.c_str(), rec.point.c_str(), rec.lhs, rec.rhs);
    }
  for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
  std::printf("%d grid points, %zu records, %ld failed, %d unconverged solves\n", r.points, r.records.size(), failed,
              r.unconverged);
  return failed == 0 && r.unconverged == 0 ? 0 : 1;
}

double guaranteed_rate(double p) {
  if (p == 2.0) return 1.0;
  if (p > 2.0) return conjugate_exponent(p) / p;
  return p - 1.0;
}

int cmd_study(const std::string& what, const RunConfig& c, const Invocation& inv) {
  const std::vector<double> deltas = inv.given("delta") ? c.delta : std::vector<double>{0.2, 0.1, 0.05, 0.025};
  FlowParams base = c.first_params();
  const CrossSection cs = build_cross_section(c.shape, 0.0, c.h);
  if (what == "dean") {
    const std::vector<double> res = inv.given("re") ? c.re : std::vector<double>{5.0};
    const StudyResult s = dean_scaling_study(cs, base, res, deltas, c.solver);
    write_text(out_path(c, "study_dean.csv"), study_csv(s));
    for (const auto& f : s.flags) std::printf("  note: %s\n", f.c_str());
    bool ok = true;
    for (const auto& r : s.rows) {
      std::printf("  re %-8g delta %-8g De %-10.4g ||Du||_2B %.6e ratio %.4e\n", r.re, r.delta, r.de, r.du_l2b,
                  r.bound_ratio);
      ok = ok && r.converged;
    }
    std::printf("slope of log||Du||_{2,B} against log(delta Re): %.4f\n", s.slope_d2);
    return ok ? 0 : 1;
  }
  if (what == "delta-approx") {
    if (!inv.given("re")) {
      FlowParams top = base;
      top.delta = *std::max_element(deltas.begin(), deltas.end());
      base.re = 0.25 * kappa_constants(cs.with_delta(top.delta), top, c.solver.korn_constant).re_threshold;
    }
    const StudyResult s = delta_approx_study(cs, base, c.sigma_spec(base.re), deltas, c.solver);
    write_text(out_path(c, "study_delta_approx.csv"), study_csv(s));
    for (const auto& f : s.flags) std::printf("  note: %s\n", f.c_str());
    bool ok = true;
    for (const auto& r : s.rows) {
      std::printf("  delta %-8g ||D(u-w)||_2 %.6e ||D(u-w)||_p %.6e\n", r.delta, r.diff_d2, r.diff_dp);
      ok = ok && r.converged;
    }
    const double order = base.p == 2.0 ? s.slope_d2 : s.slope_dp;
    const double rate = guaranteed_rate(base.p);
    std::printf("Re %.6e, observed order %.4f, guaranteed rate %.4f\n", base.re, order, rate);
    return ok && order >= rate - 0.1 ? 0 : 1;
  }
  // uniqueness
  base.delta = c.delta.at(0);
  const CrossSection csd = cs.with_delta(base.delta);
  if (!inv.given("re")) base.re = 0.4 * kappa_constants(csd, base, c.solver.korn_constant).re_threshold;
  const UniquenessResult u = uniqueness_probe(csd, base, c.solver, inv.guesses, c.seed);
  for (std::size_t i = 0; i < u.guesses.size(); ++i)
    std::printf("  guess %-22s converged %s\n", u.guesses[i].c_str(), u.converged[i] ? "yes" : "no");
  std::printf("Re %.6e (threshold %.6e), max pairwise ||D*(ui-uj)||_{2,B} = %.3e\n", u.re, u.threshold,
              u.max_distance);
  return u.all_converged() && u.max_distance < 1e-6 ? 0 : 1;
}

int cmd_mesh(const std::string& what, const RunConfig& c) {
  const Mesh m = build_mesh(c.shape, c.h);
  if (what == "build") {
    const std::string path = out_path(c, "mesh.txt");
    write_mesh(m, path);
    std::printf("wrote %s\n", path.c_str());
  }
  const CrossSection cs = build_cross_section(c.shape, 0.0, c.h);
  std::printf("vertices %d, cells %d, edges %d, boundary vertices %zu\n", m.n_vertices(), m.n_cells(), m.n_edges(),
              m.boundary_vertex_list().size());
  std::printf("area %.12f, x2 in [%g, %g], max aspect ratio %.4f\n", cs.area, m.x2_min, m.x2_max,
              max_aspect_ratio(m));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law flow in a curved pipe cross-section"};
  app.set_help_flag("--help", "print this help");  // -h would clash with --h
  app.require_subcommand(1);

  Invocation inv;
  std::string command, sub;
  int exit_code = 0;

  CLI::App* solve = app.add_subcommand("solve", "solve the full problem for one parameter set");
  inv.attach(solve);

  CLI::App* verify = app.add_subcommand("verify", "inequality suites and a priori campaigns");
  verify->require_subcommand(1);
  CLI::App* study = app.add_subcommand("study", "scaling, approximation and uniqueness studies");
  study->require_subcommand(1);
  CLI::App* mesh = app.add_subcommand("mesh", "build or inspect meshes");
  mesh->require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::string>> leaves = {{solve, "solve"}};
  Invocation leaf_inv[12];
  int li = 0;
  for (const char* w : {"tensors", "korn", "poincare", "sobolev", "apriori", "sigma"}) {
    CLI::App* s = verify->add_subcommand(w);
    leaf_inv[li++].attach(s);
    leaves.push_back({s, std::string("verify ") + w});
  }
  for (const char* w : {"dean", "delta-approx", "uniqueness"}) {
    CLI::App* s = study->add_subcommand(w);
    leaf_inv[li].attach(s);
    if (std::string(w) == "uniqueness") s->add_option("--guesses", leaf_inv[li].guesses, "number of initial guesses");
    ++li;
    leaves.push_back({s, std::string("study ") + w});
  }
  for (const char* w : {"build", "info"}) {
    CLI::App* s = mesh->add_subcommand(w);
    leaf_inv[li++].attach(s);
    leaves.push_back({s, std::string("mesh ") + w});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Invocation* active = nullptr;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i].first->parsed()) {
      command = leaves[i].second;
      active = i == 0 ? &inv : &leaf_inv[i - 1];
    }
  if (!active) {
    std::fprintf(stderr, "no command given\n");
    return 2;
  }

  RunConfig cfg;
  try {
    cfg = active->resolve(command);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  }
  if (active->dry_run) {
    std::cout << to_canonical(cfg);
    return 0;
  }

  const auto space = command.find(' ');
  const std::string group = command.substr(0, space);
  sub = space == std::string::npos ? "" : command.substr(space + 1);
  try {
    if (group == "solve") exit_code = cmd_solve(cfg);
    else if (group == "verify") exit_code = cmd_verify(sub, cfg, *active);
    else if (group == "study") exit_code = cmd_study(sub, cfg, *active);
    else exit_code = cmd_mesh(sub, cfg);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
