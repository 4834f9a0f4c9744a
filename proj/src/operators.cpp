#include "gnf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnf/constants.hpp"

namespace gnf {

Mat3 grad_star(const PointValue& v, double b, double delta) {
  Mat3 g{};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) g[j][i] = v.du[j][i];
  const double k = delta / b;
  g[2] = {0.0, -k * v.u[2], k * v.u[1]};
  return g;
}

SymTensor3 d_star(const PointValue& v, double b, double delta) {
  const double k = delta / b;
  return {v.du[0][0],
          v.du[1][1],
          k * v.u[1],
          0.5 * (v.du[0][1] + v.du[1][0]),
          0.5 * v.du[0][2],
          0.5 * (v.du[1][2] - k * v.u[2])};
}

SymTensor3 d_plane(const PointValue& v) {
  return {v.du[0][0], v.du[1][1], 0.0, 0.5 * (v.du[0][1] + v.du[1][0]), 0.0, 0.0};
}

double weighted_divergence(const PointValue& v, double b, double delta) {
  return v.du[0][0] + v.du[1][1] + delta / b * v.u[1];
}

std::array<double, 3> div_star(const SymTensor3& s, const SymTensor3& ds1, const SymTensor3& ds2,
                               double b, double delta) {
  const double k = delta / b;
  return {ds1(0, 0) + ds2(1, 0) + k * s(1, 0),
          ds1(0, 1) + ds2(1, 1) + k * (s(1, 1) - s(2, 2)),
          ds1(0, 2) + ds2(1, 2) + 2.0 * k * s(1, 2)};
}

double frobenius(const Mat3& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

QuadTensor d_star(const CrossSection& cs, const QuadField& f) {
  const FeSpace& fe = cs.fe();
  QuadTensor out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = d_star(f[g], cs.weight(fe.qp(g).x2), cs.delta);
  return out;
}

QuadTensor d_flat(const QuadField& f) {
  QuadTensor out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = d_star(f[g], 1.0, 0.0);
  return out;
}

QuadTensor d_plane(const QuadField& f) {
  QuadTensor out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = d_plane(f[g]);
  return out;
}

QuadScalar grad_star_magnitude(const CrossSection& cs, const QuadField& f) {
  const FeSpace& fe = cs.fe();
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g)
    out[g] = frobenius(grad_star(f[g], cs.weight(fe.qp(g).x2), cs.delta));
  return out;
}

QuadScalar grad_magnitude(const QuadField& f) {
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    double s = 0.0;
    for (const auto& row : f[g].du)
      for (double x : row) s += x * x;
    out[g] = std::sqrt(s);
  }
  return out;
}

QuadScalar grad_component_magnitude(const QuadField& f, int i) {
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = std::hypot(f[g].du[0][i], f[g].du[1][i]);
  return out;
}

QuadScalar dx1_magnitude(const QuadField& f) {
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    const auto& d = f[g].du[0];
    out[g] = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  }
  return out;
}

QuadScalar weighted_divergence(const CrossSection& cs, const QuadField& f) {
  const FeSpace& fe = cs.fe();
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g)
    out[g] = weighted_divergence(f[g], cs.weight(fe.qp(g).x2), cs.delta);
  return out;
}

Eigen::VectorXd div_star_weak(const CrossSection& cs, const QuadTensor& s) {
  const FeSpace& fe = cs.fe();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(3 * fe.n_p2());
  const int nq = fe.n_qp_per_cell();
  for (int c = 0; c < fe.n_cells(); ++c) {
    const auto nodes = fe.p2_nodes(c);
    for (int q = 0; q < nq; ++q) {
      const auto& p = fe.qp(c, q);
      const double b = cs.weight(p.x2), k = cs.delta / b;
      const SymTensor3& t = s[c * nq + q];
      for (int a = 0; a < 6; ++a) {
        const double na = fe.n(q, a), d1 = p.dn[2 * a], d2 = p.dn[2 * a + 1];
        // (S, D*(N e_i)) written out per component.
        const double r0 = t(0, 0) * d1 + t(0, 1) * d2;
        const double r1 = t(0, 1) * d1 + t(1, 1) * d2 + t(2, 2) * k * na;
        const double r2 = t(0, 2) * d1 + t(1, 2) * (d2 - k * na);
        out[3 * nodes[a] + 0] += p.w * b * r0;
        out[3 * nodes[a] + 1] += p.w * b * r1;
        out[3 * nodes[a] + 2] += p.w * b * r2;
      }
    }
  }
  return out;
}

namespace {

// (u . grad v) with in-plane transport only.
std::array<double, 3> transport(const PointValue& u, const PointValue& v) {
  std::array<double, 3> r{};
  for (int i = 0; i < 3; ++i) r[i] = u.u[0] * v.du[0][i] + u.u[1] * v.du[1][i];
  return r;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

double trilinear_star(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w) {
  const FeSpace& fe = cs.fe();
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) {
    const auto& p = fe.qp(g);
    const double b = cs.weight(p.x2);
    const Mat3 gv = grad_star(v[g], b, cs.delta);
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
      double ti = 0.0;
      for (int j = 0; j < 3; ++j) ti += u[g].u[j] * gv[j][i];
      acc += ti * w[g].u[i];
    }
    s += p.w * b * acc;
  }
  return s;
}

double trilinear_skew(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w) {
  const FeSpace& fe = cs.fe();
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) {
    const auto& p = fe.qp(g);
    const double b = cs.weight(p.x2);
    const double conv = 0.5 * b * (dot3(transport(u[g], v[g]), w[g].u) - dot3(transport(u[g], w[g]), v[g].u));
    const double curv = cs.delta * u[g].u[2] * (v[g].u[1] * w[g].u[2] - v[g].u[2] * w[g].u[1]);
    s += p.w * (conv + curv);
  }
  return s;
}

double trilinear_flat(const CrossSection& cs, const QuadField& u, const QuadField& v, const QuadField& w) {
  const FeSpace& fe = cs.fe();
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) s += fe.qp(g).w * dot3(transport(u[g], v[g]), w[g].u);
  return s;
}

namespace {

IdentityCheck make_identity(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return {lhs, rhs, scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale};
}

double sq(double x) { return x * x; }

}  // namespace

IdentityCheck korn_identity(const CrossSection& cs, const QuadField& f) {
  const double g2 = sq(weighted_norm(cs, grad_star_magnitude(cs, f), 2.0));
  const double d2 = sq(weighted_norm(cs, magnitudes(d_star(cs, f)), 2.0));
  const double v2 = sq(weighted_norm(cs, weighted_divergence(cs, f), 2.0));
  return make_identity(g2, 2.0 * d2 - v2);
}

IdentityCheck korn_expansion(const CrossSection& cs, const QuadField& f) {
  const FeSpace& fe = cs.fe();
  QuadScalar c2(f.size()), c3(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) {
    const double k = cs.delta / cs.weight(fe.qp(g).x2);
    c2[g] = k * f[g].u[1];
    c3[g] = k * f[g].u[2];
  }
  const double lhs = 2.0 * sq(weighted_norm(cs, magnitudes(d_star(cs, f)), 2.0));
  const double rhs = 2.0 * sq(weighted_norm(cs, magnitudes(d_plane(f)), 2.0)) +
                     2.0 * sq(weighted_norm(cs, c2, 2.0)) +
                     sq(weighted_norm(cs, grad_component_magnitude(f, 2), 2.0)) +
                     sq(weighted_norm(cs, c3, 2.0));
  return make_identity(lhs, rhs);
}

IdentityCheck korn_div_free(const CrossSection& cs, const QuadField& f) {
  const double g2 = sq(weighted_norm(cs, grad_star_magnitude(cs, f), 2.0));
  const double d2 = sq(weighted_norm(cs, magnitudes(d_star(cs, f)), 2.0));
  return make_identity(g2, 2.0 * d2);
}

double korn_thin_constant(const CrossSection& cs, double p, double classical) {
  return classical * std::pow(cs.n * cs.m, -1.0 / p) / (2.0 * (1.0 + cs.delta * cs.m));
}

InequalityCheck korn_thin_check(const CrossSection& cs, const QuadField& f, double p, double classical) {
  const double lhs = korn_thin_constant(cs, p, classical) * weighted_norm(cs, grad_star_magnitude(cs, f), p);
  return check_le("korn-inequality", lhs, weighted_norm(cs, magnitudes(d_star(cs, f)), p));
}

InequalityCheck grad_star_dominates(const CrossSection& cs, const QuadField& f) {
  return check_le("gradient-bound", weighted_norm(cs, grad_magnitude(f), 2.0),
                  weighted_norm(cs, grad_star_magnitude(cs, f), 2.0));
}

double poincare_residual(const CrossSection& cs, const QuadField& f, double q) {
  return weighted_norm(cs, dx1_magnitude(f), q) - weighted_norm(cs, vector_magnitude(f), q);
}

InequalityCheck sobolev_check(const CrossSection& cs, const QuadField& f, double q, double r) {
  const double lhs = lq_norm(cs, vector_magnitude(f), r, false);
  const double rhs = sobolev_constant(q, r, cs.area) * lq_norm(cs, grad_magnitude(f), q, false);
  return check_le("sobolev", lhs, rhs);
}

}  // namespace gnf
