#include <doctest.h>

#include <cmath>

#include "gnf/dean.hpp"
#include "gnf/harness.hpp"

using namespace gnf;

TEST_CASE("log-log slope") {
  CHECK(log_log_slope({1, 2, 4, 8}, {3, 12, 48, 192}) == doctest::Approx(2.0));
  CHECK(log_log_slope({0.1, 0.01}, {1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(std::isnan(log_log_slope({1.0}, {2.0})));
  CHECK(std::isnan(log_log_slope({1.0, 2.0}, {0.0, -1.0})));
}

TEST_CASE("flattened problem coincides with the full one in a straight pipe") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.2);
  FlowParams prm;
  prm.p = 2.5;
  prm.re = 10.0;
  const SolveResult u = solve_full(cs, prm, SolverOptions{});
  const DeanResult w = solve_dean(cs, prm, SigmaSpec::dean(prm.re), SolverOptions{});
  REQUIRE(w.converged);
  CHECK((u.solution.u.coef - w.solution.u.coef).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("flattened secondary flow for delta > 0") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.2, 0.2);
  FlowParams prm;
  prm.p = 2.0;
  prm.delta = 0.2;
  prm.re = 20.0;
  const DeanResult w = solve_dean(cs, prm, SigmaSpec::dean(prm.re), SolverOptions{});
  REQUIRE(w.converged);
  CHECK(w.norms.at("dw_l2") > 1e-4);
  for (const auto& b : w.bounds) CHECK(b.holds);
  // Re = 0 and c0 = 0 leaves only the axial flow.
  prm.re = 0.0;
  const DeanResult z = solve_dean(cs, prm, SigmaSpec::dean(0.0), SolverOptions{});
  CHECK(z.norms.at("dw_l2") == 0.0);
}

TEST_CASE("thinning flattened bounds need an admissible exponent") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.1, 0.25);
  FlowParams prm;
  prm.p = 1.5;
  prm.delta = 0.1;
  const DeanResult ok = solve_dean(cs, prm, SigmaSpec::power(1.0, 2.0 / 3.0), SolverOptions{});
  REQUIRE(ok.converged);
  CHECK(ok.bounds.size() == 2);
  for (const auto& b : ok.bounds) CHECK(b.holds);
  const DeanResult bad = solve_dean(cs, prm, SigmaSpec::dean(1.0), SolverOptions{});
  CHECK(bad.bounds.empty());
  CHECK_FALSE(bad.constants.alpha_admissible);
}

TEST_CASE("delta study refuses large Reynolds numbers") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.3);
  FlowParams prm;
  prm.re = 1e6;
  CHECK_THROWS_AS(delta_approx_study(cs, prm, SigmaSpec::dean(prm.re), {0.1, 0.05}, SolverOptions{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(delta_approx_study(cs, prm, SigmaSpec::dean(prm.re), {}, SolverOptions{}), std::invalid_argument);
}

TEST_CASE("Dean scaling is linear for small delta Re") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.25);
  FlowParams prm;
  const StudyResult s = dean_scaling_study(cs, prm, {1.0}, {0.1, 0.05}, SolverOptions{});
  REQUIRE(s.rows.size() == 2);
  CHECK(s.slope_d2 == doctest::Approx(1.0).epsilon(0.05));
  for (const auto& r : s.rows) CHECK(r.bound_ratio < 1.0);
}
