#include <doctest.h>

#include <cmath>

#include "gnf/config.hpp"
#include "gnf/harness.hpp"
#include "gnf/output.hpp"

using namespace gnf;

TEST_CASE("every bound carries a registered anchor") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.2, 0.3);
  for (double p : {1.5, 2.0, 3.0}) {
    FlowParams prm;
    prm.p = p;
    prm.delta = 0.2;
    prm.re = 1e-3;
    const SolveResult r = solve_full(cs, prm, SolverOptions{});
    const auto recs = verify_apriori(prm, r.report);
    CHECK_FALSE(recs.empty());
    for (const auto& rec : recs) {
      CHECK(anchor_registered(rec.anchor));
      CHECK(rec.pass);
    }
    const DeanResult w = solve_dean(cs, prm, campaign_sigma(p), SolverOptions{});
    for (const auto& rec : verify_dean(prm, w)) CHECK(anchor_registered(rec.anchor));
  }
}

TEST_CASE("fuzz suites are reproducible and clean") {
  const FuzzSummary a = fuzz_tensors(42, 300, {1.5, 3.0});
  const FuzzSummary b = fuzz_tensors(42, 300, {1.5, 3.0});
  CHECK(fuzz_csv(a) == fuzz_csv(b));
  CHECK(a.violations() == 0);
  for (const auto& e : a.entries) CHECK(anchor_registered(e.anchor));
  const FuzzSummary k = fuzz_korn(1, 3, {0.0, 0.5}, 0.1);
  CHECK(k.violations() == 0);
  CHECK(fuzz_sobolev(1, 3, 0.25).violations() == 0);
  CHECK(fuzz_sigma(1, 3, 0.25).violations() == 0);
  CHECK(fuzz_poincare(1, 3, {0.3}, 0.25).violations() == 0);
  CHECK(fuzz_field_estimates(1, 2, {1.5, 3.0}, {0.3}, 0.25).violations() == 0);
}

TEST_CASE("Jacobian orders") {
  for (double o : jacobian_orders(7, 10, 3.0, {1e-2, 1e-3, 1e-4})) CHECK(o == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("uniqueness probe at Re = 0") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.1, 0.3);
  FlowParams prm;
  prm.delta = 0.1;
  const UniquenessResult u = uniqueness_probe(cs, prm, SolverOptions{}, 3, 1);
  CHECK(u.all_converged());
  CHECK(u.max_distance < 1e-9);
  prm.re = u.threshold;
  CHECK_THROWS_AS(uniqueness_probe(cs, prm, SolverOptions{}, 3, 1), std::invalid_argument);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.command = "study dean";
  c.p = {1.5, 3.0};
  c.delta = {0.1, 0.025};
  c.re = {0.3};
  c.h = 0.07;
  c.sigma = SigmaSpec::Kind::power;
  c.sigma_c0 = 0.1;
  c.sigma_alpha = 2.0 / 3.0;
  c.seed = 99;
  c.solver.scheme = Scheme::newton;
  const std::string t = to_canonical(c);
  const RunConfig r = parse_config(t);
  CHECK(to_canonical(r) == t);
  CHECK(r.sigma_alpha == c.sigma_alpha);
  CHECK_THROWS_AS(parse_config("bogus = 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("h = abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("p"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("seed = -4"), std::invalid_argument);
  RunConfig bad;
  bad.p = {0.5};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(parse_config("# comment\n re = 1,2 # trailing\n").re.size() == 2);
}

TEST_CASE("coefficients survive a text round trip") {
  Solution s{VelocityField{Eigen::VectorXd::LinSpaced(9, -1.0 / 3.0, 7.0 / 3.0)},
             PressureField{Eigen::VectorXd::Constant(2, std::sqrt(2.0))}};
  const Solution r = parse_coefficients(coefficients_text(s));
  CHECK(r.u.coef == s.u.coef);
  CHECK(r.pi.coef == s.pi.coef);
  CHECK_THROWS(parse_coefficients("velocity 2\n1 2 3\n"));
}

TEST_CASE("fixed number format") {
  CHECK(format_number(0.5) == "5.000000000000e-01");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(canonical_number(0.1) == "0.1");
  VerificationRecord r{"c", "a, b", "p=2", 1.0, 2.0, 1.0, true, false};
  CHECK(records_csv({r}).find("\"a, b\"") != std::string::npos);
}
