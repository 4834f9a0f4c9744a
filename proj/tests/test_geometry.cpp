#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "gnf/constants.hpp"
#include "gnf/cross_section.hpp"
#include "gnf/fields.hpp"

using namespace gnf;

TEST_CASE("disk mesh counts") {
  for (int n : {1, 3, 8}) {
    const Mesh m = build_disk_mesh(n);
    CHECK(m.n_cells() == 6 * n * n);
    CHECK(m.n_vertices() == 3 * n * (n + 1) + 1);
    CHECK(m.boundary_vertex_list().size() == static_cast<std::size_t>(6 * n));
    // Euler: V - E + F = 1 for a disk.
    CHECK(m.n_vertices() - m.n_edges() + m.n_cells() == 1);
  }
}

TEST_CASE("curved disk area converges to pi") {
  const CrossSection coarse = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.25);
  const CrossSection fine = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.1);
  CHECK(std::abs(fine.area - std::numbers::pi) < 1e-5);
  CHECK(std::abs(fine.area - std::numbers::pi) < std::abs(coarse.area - std::numbers::pi));
}

TEST_CASE("curvature constants of the disk") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.5, 0.2);
  CHECK(cs.m == doctest::Approx(2.0));
  CHECK(cs.n == doctest::Approx(1.5));
  // integral of 1 + delta x2 over a symmetric section is its area.
  CHECK(cs.b_l1 == doctest::Approx(cs.area).epsilon(1e-12));
  CHECK(cs.with_delta(0.0).m == 1.0);
  CHECK_THROWS(build_cross_section(ShapeSpec::unit_disk(), 1.0, 0.2));
}

TEST_CASE("rectangle section") {
  const CrossSection cs = build_cross_section(ShapeSpec::rectangle(1.2, 0.8), 0.2, 0.1);
  CHECK(cs.area == doctest::Approx(0.96).epsilon(1e-13));
  CHECK(cs.n == doctest::Approx(1.08));
  CHECK(cs.m == doctest::Approx(1.0 / 0.92));
  CHECK_THROWS(build_cross_section(ShapeSpec::rectangle(2.0, 1.0), 0.0, 0.1));
}

TEST_CASE("mesh text round trip") {
  const Mesh m = build_rectangle_mesh(1.0, 1.0, 3, 2);
  const auto path = (std::filesystem::temp_directory_path() / "gnf_mesh_roundtrip.txt").string();
  write_mesh(m, path);
  const Mesh r = read_mesh(path);
  std::filesystem::remove(path);
  CHECK(r.n_vertices() == m.n_vertices());
  CHECK(r.n_cells() == m.n_cells());
  CHECK(r.n_edges() == m.n_edges());
  CHECK(r.vertices[5] == m.vertices[5]);
}

TEST_CASE("malformed meshes are rejected") {
  Mesh m;
  m.vertices = {{0, 0}, {1, 0}, {2, 0}};
  m.cells = {{0, 1, 2}};
  CHECK_THROWS(finalize_topology(m));
  const auto path = (std::filesystem::temp_directory_path() / "gnf_mesh_bad.txt").string();
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("vertices 3\n0 0\n1 0\n0 1\ncells 1\n0 1 7\n", f);
    std::fclose(f);
  }
  CHECK_THROWS(read_mesh(path));
  std::filesystem::remove(path);
}

TEST_CASE("norms of simple fields") {
  const CrossSection cs = build_cross_section(ShapeSpec::rectangle(1.0, 1.0), 0.3, 0.25);
  const QuadScalar one = sample_scalar(cs.fe(), [](double, double) { return 1.0; });
  CHECK(lq_norm(cs, one, 2.0, false) == doctest::Approx(1.0));
  // integral of (1 + 0.3 x2) x2 over the unit square centred at 0 is 0.3 / 12.
  const QuadScalar x2 = sample_scalar(cs.fe(), [](double, double y) { return y; });
  CHECK(integral(cs, x2, true) == doctest::Approx(0.025));
  CHECK(weighted_norm(cs, one, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("Sobolev and exponent helpers") {
  CHECK(conjugate_exponent(3.0) == doctest::Approx(1.5));
  CHECK(sobolev_exponent(1.5) == doctest::Approx(6.0));
  // q = r = 2: max(2, 1) / (2 sqrt 2) |Sigma|^(1/2).
  CHECK(sobolev_constant(2.0, 2.0, 4.0) == doctest::Approx(2.0 / std::sqrt(2.0)));
  CHECK_THROWS(sobolev_constant(3.0, 2.0, 1.0));
  CHECK_THROWS(sobolev_constant(1.5, 7.0, 1.0));
}

TEST_CASE("kappa table at p = 2 does not depend on the Korn constant") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.1, 0.2);
  FlowParams prm;
  prm.p = 2.0;
  prm.delta = 0.1;
  const KappaTable a = kappa_constants(cs, prm, 0.5), b = kappa_constants(cs, prm, 0.9);
  CHECK(a.k1 == b.k1);
  CHECK(a.re_threshold == b.re_threshold);
  CHECK(a.re_threshold > 0.0);
  prm.p = 1.6;
  CHECK(kappa_constants(cs, prm, 0.5).korn_dependent);
}

TEST_CASE("thickening constants on the unit disk") {
  const CrossSection cs = build_cross_section(ShapeSpec::unit_disk(), 0.0, 0.1);
  FlowParams prm;
  prm.p = 3.0;
  prm.g = 2.0;
  const KappaTable k = kappa_constants(cs, prm);
  // m = 1: kappa1 = |G| |Sigma| / sqrt 2, kappa2 = |Sigma| kappa1^2 / 2.
  CHECK(k.k1 == doctest::Approx(2.0 * cs.area / std::sqrt(2.0)));
  CHECK(k.k2 == doctest::Approx(0.5 * cs.area * k.k1 * k.k1));
  CHECK(k.re_threshold == doctest::Approx(2.0 / (k.k1 * k.k3)));
}
