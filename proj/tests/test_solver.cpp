#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnf/harness.hpp"
#include "gnf/operators.hpp"
#include "gnf/solver.hpp"

using namespace gnf;

namespace {

FlowParams params(double p, double delta, double re, double g = 1.0) {
  FlowParams f;
  f.p = p;
  f.delta = delta;
  f.re = re;
  f.g = g;
  return f;
}

}  // namespace

TEST_CASE("Newtonian straight pipe reproduces the parabolic profile") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.1);
  const SolveResult r = solve_full(cs, params(2.0, 0.0, 0.0), SolverOptions{});
  REQUIRE(r.report.converged);
  double err = 0.0;
  for (int k = 0; k < cs.fe().n_p2(); ++k) {
    const auto& x = cs.fe().node(k);
    err = std::max(err, std::abs(r.solution.u.at(k, 2) - 0.25 * (1.0 - x[0] * x[0] - x[1] * x[1])));
  }
  CHECK(err < 1e-5);
  // flux of G (1 - r^2) / 4 over the unit disk is pi G / 8.
  CHECK(r.report.norms.at("flux") == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-5));
  CHECK(r.report.norms.at("du_l2b") == 0.0);
  CHECK(r.report.norms.at("pressure_lpc") < 1e-12);
}

TEST_CASE("energy balance") {
  // Testing with the solution removes the convective and pressure terms:
  // (tau(D* u), B D* u) = G (1, u3).
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.2, 0.15);
  for (double p : {1.5, 3.0}) {
    const SolveResult r = solve_full(cs, params(p, 0.2, 10.0), SolverOptions{});
    REQUIRE(r.report.converged);
    CHECK(r.report.norms.at("energy") == doctest::Approx(r.report.norms.at("work")).epsilon(1e-8));
  }
}

TEST_CASE("no secondary flow when delta Re = 0") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.15);
  const SolveResult a = solve_full(cs, params(3.0, 0.0, 50.0), SolverOptions{});
  CHECK(unidirectional_check(cs, a.solution, 1e-12).unidirectional);
  const CrossSection cd = cs.with_delta(0.2);
  const SolveResult b = solve_full(cd, params(1.5, 0.2, 0.0), SolverOptions{});
  CHECK(unidirectional_check(cd, b.solution, 1e-12).unidirectional);
}

TEST_CASE("secondary flow when delta Re > 0") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.2, 0.15);
  const SolveResult r = solve_full(cs, params(2.0, 0.2, 20.0), SolverOptions{});
  REQUIRE(r.report.converged);
  const auto u = unidirectional_check(cs, r.solution, 1e-8);
  CHECK_FALSE(u.unidirectional);
  CHECK(u.norm > 1e-4);
  for (const auto& b : r.report.bounds) CHECK(b.holds);
}

TEST_CASE("schemes agree") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.1, 0.2);
  const FlowParams prm = params(2.5, 0.1, 5.0);
  SolverOptions o;
  o.scheme = Scheme::picard;
  o.max_iter = 200;
  const SolveResult a = solve_full(cs, prm, o);
  o.scheme = Scheme::newton;
  o.initial = InitialGuess::zero;
  const SolveResult b = solve_full(cs, prm, o);
  o.scheme = Scheme::picard_newton;
  o.continuation_steps = 2;
  const SolveResult c = solve_full(cs, prm, o);
  REQUIRE(a.report.converged);
  REQUIRE(b.report.converged);
  REQUIRE(c.report.converged);
  CHECK(solution_distance(cs, a.solution, b.solution) < 1e-8);
  CHECK(solution_distance(cs, b.solution, c.solution) < 1e-8);
}

TEST_CASE("axial-only solve matches the full solve when delta Re = 0") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.3, 0.2);
  const FlowParams prm = params(1.75, 0.3, 0.0);
  const SolveResult r = solve_full(cs, prm, SolverOptions{});
  const ScalarField s = axial_only_solve(cs, prm, SolverOptions{});
  double err = 0.0;
  for (int k = 0; k < cs.fe().n_p2(); ++k) err = std::max(err, std::abs(s.coef[k] - r.solution.u.at(k, 2)));
  CHECK(err < 1e-9);
}

TEST_CASE("pressure estimate is finite") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.2, 0.2);
  const SolveResult r = solve_full(cs, params(3.0, 0.2, 5.0), SolverOptions{});
  const PressureEstimate e = check_pressure_estimate(cs, r.report.params, r.solution);
  CHECK(e.lhs > 0.0);
  CHECK(std::isfinite(e.ratio));
  const SolveResult z = solve_full(cs.with_delta(0.0), params(3.0, 0.0, 0.0), SolverOptions{});
  CHECK(check_pressure_estimate(cs.with_delta(0.0), z.report.params, z.solution).ratio == 0.0);
}

TEST_CASE("invalid input") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.1, 0.3);
  CHECK_THROWS_AS(solve_full(cs, params(2.0, 0.2, 0.0), SolverOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(solve_full(cs, params(0.9, 0.1, 0.0), SolverOptions{}), std::invalid_argument);
  SolverOptions o;
  o.damping = 0.0;
  CHECK_THROWS_AS(o.validate(), std::invalid_argument);
  o = SolverOptions{};
  o.initial = InitialGuess::supplied;
  CHECK_THROWS_AS(solve_full(cs, params(2.0, 0.1, 0.0), o), std::invalid_argument);
  CHECK(scheme_from_string("picard-newton") == Scheme::picard_newton);
  CHECK_THROWS(scheme_from_string("bfgs"));
}

TEST_CASE("iteration limit reports non-convergence") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.3, 0.2);
  SolverOptions o;
  o.max_iter = 1;
  o.scheme = Scheme::picard;
  o.initial = InitialGuess::zero;
  const SolveResult r = solve_full(cs, params(3.0, 0.3, 20.0), o);
  CHECK_FALSE(r.report.converged);
  CHECK(r.report.message == "iteration limit reached");
}
