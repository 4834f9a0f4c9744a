#include "gnf/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gnf {

namespace {
constexpr int kIndex[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
}

SymTensor3 SymTensor3::sym(const Mat3& a) {
  return {a[0][0],
          a[1][1],
          a[2][2],
          0.5 * (a[0][1] + a[1][0]),
          0.5 * (a[0][2] + a[2][0]),
          0.5 * (a[1][2] + a[2][1])};
}

double SymTensor3::operator()(int i, int j) const { return c[kIndex[i][j]]; }

Mat3 SymTensor3::to_matrix() const {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
  return m;
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& o) {
  for (int k = 0; k < 6; ++k) c[k] += o.c[k];
  return *this;
}

SymTensor3& SymTensor3::operator-=(const SymTensor3& o) {
  for (int k = 0; k < 6; ++k) c[k] -= o.c[k];
  return *this;
}

SymTensor3& SymTensor3::operator*=(double s) {
  for (double& v : c) v *= s;
  return *this;
}

SymTensor3 operator+(SymTensor3 a, const SymTensor3& b) { return a += b; }
SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) { return a -= b; }
SymTensor3 operator*(double s, SymTensor3 a) { return a *= s; }

double ddot(const SymTensor3& a, const SymTensor3& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] +
         2.0 * (a.c[3] * b.c[3] + a.c[4] * b.c[4] + a.c[5] * b.c[5]);
}

double norm(const SymTensor3& a) { return std::sqrt(ddot(a, a)); }

void PowerLawModel::validate() const {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("power-law exponent must satisfy p > 1");
  if (!(gamma_dot > 0.0) || !std::isfinite(gamma_dot))
    throw std::invalid_argument("shear-rate scale must be positive");
}

Rheology PowerLawModel::regime() const {
  if (p < 2.0) return Rheology::thinning;
  if (p > 2.0) return Rheology::thickening;
  return Rheology::newtonian;
}

std::string to_string(Rheology r) {
  switch (r) {
    case Rheology::thinning: return "shear-thinning";
    case Rheology::newtonian: return "newtonian";
    case Rheology::thickening: return "shear-thickening";
  }
  return "unknown";
}

double viscosity_factor(const PowerLawModel& m, double eta_norm_sq) {
  if (m.p == 2.0) return 1.0;
  return std::pow(1.0 + m.gamma_dot * m.gamma_dot * eta_norm_sq, 0.5 * (m.p - 2.0));
}

SymTensor3 tau(const PowerLawModel& m, const SymTensor3& eta) {
  return (2.0 * viscosity_factor(m, ddot(eta, eta))) * eta;
}

SymTensor3 tau_jacobian(const PowerLawModel& m, const SymTensor3& eta, const SymTensor3& xi) {
  if (m.p == 2.0) return 2.0 * xi;
  const double g2 = m.gamma_dot * m.gamma_dot;
  const double s = 1.0 + g2 * ddot(eta, eta);
  const double f = std::pow(s, 0.5 * (m.p - 2.0));
  const double coef = 2.0 * (m.p - 2.0) * g2 * f / s * ddot(eta, xi);
  SymTensor3 out = (2.0 * f) * xi;
  out += coef * eta;
  return out;
}

namespace {
double relative_margin(double diff, double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return diff / scale;
}
}  // namespace

InequalityCheck check_le(std::string name, double lhs, double rhs) {
  InequalityCheck c{std::move(name), lhs, rhs, relative_margin(rhs - lhs, lhs, rhs), true};
  c.holds = std::isfinite(c.slack) && c.slack >= -kSlackFloor;
  return c;
}

InequalityCheck check_ge(std::string name, double lhs, double rhs) {
  InequalityCheck c{std::move(name), lhs, rhs, relative_margin(lhs - rhs, lhs, rhs), true};
  c.holds = std::isfinite(c.slack) && c.slack >= -kSlackFloor;
  return c;
}

double thinning_continuity_constant(double p) { return 1.0 + std::pow(2.0, 0.5 * (2.0 - p)); }

// The textbook statements assume a unit shear-rate scale; for general gd
// the bounds follow by rescaling eta -> gd eta.
std::vector<InequalityCheck> check_thickening_properties(const PowerLawModel& m,
                                                         const SymTensor3& eta,
                                                         const SymTensor3& zeta) {
  m.validate();
  if (m.p < 2.0) throw std::invalid_argument("thickening properties need p >= 2");
  const double p = m.p, g2 = m.gamma_dot * m.gamma_dot;
  const double gp = std::pow(m.gamma_dot, p - 2.0);
  const SymTensor3 te = tau(m, eta), tz = tau(m, zeta);
  const SymTensor3 d = eta - zeta;
  const double ne = norm(eta), nz = norm(zeta), nd = norm(d);
  const double mono = ddot(te - tz, d);
  const double coer = ddot(te, eta);

  std::vector<InequalityCheck> out;
  // tau carries the factor 2, so the continuity constant is 2 (p - 1).
  out.push_back(check_le("continuity", norm(te - tz),
                         2.0 * (p - 1.0) * std::pow(1.0 + g2 * (ne * ne + nz * nz), 0.5 * (p - 2.0)) * nd));
  out.push_back(check_ge("coercivity-l2", coer, 2.0 * ne * ne));
  out.push_back(check_ge("coercivity-lp", coer, 2.0 * gp * std::pow(ne, p)));
  out.push_back(check_ge("monotonicity-l2", mono, nd * nd));
  out.push_back(check_ge("monotonicity-lp", mono,
                         gp * std::pow(nd, p) / (std::pow(2.0, p - 1.0) * (p - 1.0))));
  return out;
}

std::vector<InequalityCheck> check_thinning_properties(const PowerLawModel& m,
                                                       const SymTensor3& eta,
                                                       const SymTensor3& zeta) {
  m.validate();
  if (m.p >= 2.0) throw std::invalid_argument("thinning properties need 1 < p < 2");
  const double p = m.p, g2 = m.gamma_dot * m.gamma_dot;
  const double gp = std::pow(m.gamma_dot, p - 2.0);
  const SymTensor3 te = tau(m, eta), tz = tau(m, zeta);
  const SymTensor3 d = eta - zeta;
  const double ne = norm(eta), nz = norm(zeta), nd = norm(d);

  std::vector<InequalityCheck> out;
  out.push_back(check_le("continuity", norm(te - tz),
                         2.0 * thinning_continuity_constant(p) * gp * std::pow(nd, p - 1.0)));
  out.push_back(check_ge("coercivity", ddot(te, eta),
                         2.0 * std::pow(1.0 + g2 * ne * ne, 0.5 * (p - 2.0)) * ne * ne));
  out.push_back(check_ge(
      "monotonicity", ddot(te - tz, d),
      2.0 * (p - 1.0) * std::pow(1.0 + g2 * (ne * ne + nz * nz), 0.5 * (p - 2.0)) * nd * nd));
  return out;
}

InequalityCheck continuity_without_factor_two(const PowerLawModel& m, const SymTensor3& eta,
                                             const SymTensor3& zeta) {
  m.validate();
  const double p = m.p, g2 = m.gamma_dot * m.gamma_dot;
  const double ne = norm(eta), nz = norm(zeta), nd = norm(eta - zeta);
  const double lhs = norm(tau(m, eta) - tau(m, zeta));
  if (p >= 2.0)
    return check_le("continuity-half", lhs, (p - 1.0) * std::pow(1.0 + g2 * (ne * ne + nz * nz), 0.5 * (p - 2.0)) * nd);
  return check_le("continuity-half", lhs,
                  thinning_continuity_constant(p) * std::pow(m.gamma_dot, p - 2.0) * std::pow(nd, p - 1.0));
}

}  // namespace gnf
