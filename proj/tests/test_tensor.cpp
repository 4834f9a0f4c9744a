#include <doctest.h>

#include <cmath>
#include <random>

#include "gnf/harness.hpp"
#include "gnf/quadrature.hpp"
#include "gnf/tensor.hpp"

using namespace gnf;

TEST_CASE("off-diagonal entries count twice in the Frobenius product") {
  const SymTensor3 a(0, 0, 0, 1, 0, 0);
  CHECK(ddot(a, a) == doctest::Approx(2.0));
  const SymTensor3 b(1, 2, 3, 0, 0, 0);
  CHECK(norm(b) == doctest::Approx(std::sqrt(14.0)));
}

TEST_CASE("sym and to_matrix are inverse on symmetric input") {
  const SymTensor3 a(1, -2, 3, 0.5, -0.25, 4);
  const SymTensor3 b = SymTensor3::sym(a.to_matrix());
  for (int k = 0; k < 6; ++k) CHECK(b.c[k] == a.c[k]);
  CHECK(a(0, 1) == a(1, 0));
  CHECK(a(1, 2) == 4.0);
}

TEST_CASE("Newtonian stress is twice the rate of strain") {
  const SymTensor3 e(0.3, -0.1, 0.7, 0.2, -0.4, 0.9);
  const SymTensor3 t = tau({2.0, 1.0}, e);
  for (int k = 0; k < 6; ++k) CHECK(t.c[k] == doctest::Approx(2.0 * e.c[k]));
}

TEST_CASE("power-law stress at a unit tensor") {
  // |eta| = 1, p = 3: tau = 2 (1 + 1)^(1/2) eta.
  const SymTensor3 e(1, 0, 0, 0, 0, 0);
  CHECK(tau({3.0, 1.0}, e).c[0] == doctest::Approx(2.0 * std::sqrt(2.0)));
  // shear rate 2 scales the norm inside the viscosity: (1 + 4)^(-1/4) for p = 1.5.
  CHECK(tau({1.5, 2.0}, e).c[0] == doctest::Approx(2.0 * std::pow(5.0, -0.25)));
  CHECK(viscosity_factor({4.0, 1.0}, 3.0) == doctest::Approx(4.0));
}

TEST_CASE("Jacobian matches a central difference") {
  std::mt19937_64 rng(3);
  for (double p : {1.5, 2.0, 3.5}) {
    const PowerLawModel m{p, 1.3};
    const SymTensor3 e = random_tensor(rng, 2.0), x = random_tensor(rng, 2.0);
    const double h = 1e-5;
    const SymTensor3 fd = (0.5 / h) * (tau(m, e + h * x) - tau(m, e - h * x));
    CHECK(norm(fd - tau_jacobian(m, e, x)) < 1e-7 * norm(fd));
  }
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(PowerLawModel({1.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(PowerLawModel({2.0, 0.0}).validate(), std::invalid_argument);
  CHECK(PowerLawModel({1.5, 1.0}).regime() == Rheology::thinning);
  CHECK(PowerLawModel({2.0, 1.0}).regime() == Rheology::newtonian);
  CHECK(PowerLawModel({3.0, 1.0}).regime() == Rheology::thickening);
}

TEST_CASE("structural properties hold on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SymTensor3 a = random_tensor(rng, 5.0), b = random_tensor(rng, 5.0);
    for (const auto& c : check_thickening_properties({3.0, 1.0}, a, b)) CHECK(c.holds);
    for (const auto& c : check_thinning_properties({1.5, 1.0}, a, b)) CHECK(c.holds);
    for (const auto& c : check_thickening_properties({2.5, 0.5}, a, b)) CHECK(c.holds);
  }
  CHECK_THROWS(check_thinning_properties({2.0, 1.0}, SymTensor3{}, SymTensor3{}));
  CHECK_THROWS(check_thickening_properties({1.8, 1.0}, SymTensor3{}, SymTensor3{}));
}

TEST_CASE("inequality slack") {
  CHECK(check_le("x", 1.0, 1.0 + 1e-13).holds);
  CHECK(check_le("x", 1.0 + 1e-13, 1.0).holds);  // inside the floor
  CHECK_FALSE(check_le("x", 1.0 + 1e-9, 1.0).holds);
  CHECK(check_ge("x", 2.0, 1.0).slack == doctest::Approx(0.5));
  CHECK(check_le("x", 0.0, 0.0).holds);
  CHECK(thinning_continuity_constant(1.5) == doctest::Approx(1.0 + std::pow(2.0, 0.25)));
}

TEST_CASE("triangle rule integrates monomials up to degree 6") {
  const auto& rule = triangle_rule();
  CHECK(rule.size() == 12);
  // integral of x^a y^b over the reference triangle is a! b! / (a + b + 2)!.
  const auto fact = [](int n) { double f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      double s = 0.0;
      for (const auto& q : rule) s += q.w * std::pow(q.xi, a) * std::pow(q.eta, b);
      CHECK(s == doctest::Approx(fact(a) * fact(b) / fact(a + b + 2)).epsilon(1e-13));
    }
}
