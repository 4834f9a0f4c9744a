#include <doctest.h>

#include <cmath>
#include <random>

#include "gnf/estimates.hpp"
#include "gnf/harness.hpp"
#include "gnf/operators.hpp"

using namespace gnf;

TEST_CASE("toroidal gradient adds the curvature row") {
  PointValue v;
  v.u = {0.5, -1.0, 2.0};
  v.du[0] = {1.0, 2.0, 3.0};
  v.du[1] = {4.0, 5.0, 6.0};
  const double delta = 0.5, b = 1.5;
  const Mat3 g = grad_star(v, b, delta);
  CHECK(g[0][2] == 3.0);
  CHECK(g[1][0] == 4.0);
  CHECK(g[2][0] == 0.0);
  CHECK(g[2][1] == doctest::Approx(-delta / b * 2.0));
  CHECK(g[2][2] == doctest::Approx(delta / b * -1.0));
  // (1/B) d_j (B u_j) = d1 u1 + d2 u2 + delta/B u2.
  CHECK(weighted_divergence(v, b, delta) == doctest::Approx(1.0 + 5.0 - delta / b));
  const SymTensor3 d = d_star(v, b, delta);
  CHECK(d(1, 2) == doctest::Approx(0.5 * (6.0 - delta / b * 2.0)));
  CHECK(d(2, 2) == doctest::Approx(delta / b * -1.0));
}

TEST_CASE("Korn identity on discrete fields") {
  const CrossSection base = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.2);
  std::mt19937_64 rng(5);
  for (double d : {0.0, 0.4, 0.8}) {
    const CrossSection cs = base.with_delta(d);
    const QuadField f = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
    CHECK(korn_identity(cs, f).residual < 1e-10);
    CHECK(korn_expansion(cs, f).residual < 1e-10);
    CHECK(grad_star_dominates(cs, f).holds);
  }
}

TEST_CASE("stream-function fields are B-divergence free") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.6, 0.1);
  std::mt19937_64 rng(9);
  const QuadField f = random_div_free_field(cs, rng);
  const double dv = weighted_norm(cs, weighted_divergence(cs, f), 2.0);
  CHECK(dv < 1e-12 * weighted_norm(cs, grad_star_magnitude(cs, f), 2.0));
  CHECK(korn_div_free(cs, f).residual < 1e-6);
}

TEST_CASE("weak toroidal divergence of a constant stress") {
  // S = I (only the 33 entry matters for the curvature row): (S, B D* phi)
  // equals the integral of B tr(D* phi).
  const CrossSection cs = build_cross_section(ShapeSpec::rectangle(1.0, 1.0), 0.3, 0.25);
  QuadTensor s(cs.fe().n_qp(), SymTensor3(1, 1, 1, 0, 0, 0));
  const Eigen::VectorXd r = div_star_weak(cs, s);
  std::mt19937_64 rng(1);
  const VelocityField v = random_velocity(cs.fe(), rng);
  const QuadField f = evaluate(cs.fe(), v);
  const QuadTensor d = d_star(cs, f);
  QuadScalar tr(d.size());
  for (std::size_t g = 0; g < d.size(); ++g) tr[g] = d[g].c[0] + d[g].c[1] + d[g].c[2];
  CHECK(r.dot(v.coef) == doctest::Approx(integral(cs, tr, true)).epsilon(1e-12));
}

TEST_CASE("convective forms") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.3, 0.2);
  std::mt19937_64 rng(2);
  const QuadField u = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
  const QuadField v = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
  const QuadField w = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
  // The skew form is antisymmetric in its last two arguments.
  CHECK(trilinear_skew(cs, u, v, w) == doctest::Approx(-trilinear_skew(cs, u, w, v)).epsilon(1e-12));
  CHECK(std::abs(trilinear_skew(cs, u, v, v)) < 1e-13);
  CHECK(trilinear_bound_thick(cs, u, v, w).holds);
}

TEST_CASE("Poincare and Sobolev on random fields") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.5, 0.2);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    const QuadField f = evaluate(cs.fe(), random_velocity(cs.fe(), rng));
    CHECK(poincare_residual(cs, f, 2.0) > 0.0);
    CHECK(poincare_residual(cs, f, 1.5) > 0.0);
    CHECK(sobolev_check(cs, f, 1.5, 6.0).holds);
    CHECK(sobolev_check(cs, f, 3.0, 3.0).holds);
  }
}

TEST_CASE("integrated stress estimates") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.3, 0.2);
  std::mt19937_64 rng(8);
  const QuadTensor a = d_star(cs, evaluate(cs.fe(), random_velocity(cs.fe(), rng)));
  const QuadTensor b = d_star(cs, evaluate(cs.fe(), random_velocity(cs.fe(), rng)));
  for (const auto& c : tensor_field_estimates_thick(cs, 3.0, a, b)) CHECK(c.holds);
  for (const auto& c : tensor_field_estimates_thin(cs, 1.5, a, b)) CHECK(c.holds);
  CHECK(divergence_gap_check(cs, 3.0, a).holds);
  CHECK(divergence_gap_check(cs, 1.5, a).holds);
}

TEST_CASE("sigma source") {
  const SigmaSpec d = SigmaSpec::dean(3.0);
  CHECK(d.value(-2.0) == doctest::Approx(12.0));
  CHECK(*d.derivative(-2.0) == doctest::Approx(-12.0));
  const SigmaSpec p = SigmaSpec::power(2.0, 0.5);
  CHECK(p.value(-4.0) == doctest::Approx(4.0));
  CHECK_FALSE(p.derivative(0.5).has_value());
  const auto [lo, hi] = thinning_alpha_range(1.5);
  CHECK(lo == doctest::Approx(1.0 / 3.0));
  CHECK(hi == doctest::Approx(1.0));
}
