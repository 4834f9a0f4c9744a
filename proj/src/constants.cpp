#include "gnf/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gnf {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

double conjugate_exponent(double q) {
  if (!(q > 1.0)) throw std::invalid_argument("exponent must exceed 1");
  return q / (q - 1.0);
}

double sobolev_exponent(double q) {
  if (!(q > 1.0 && q < 2.0)) throw std::invalid_argument("Sobolev exponent needs 1 < q < 2");
  return 2.0 * q / (2.0 - q);
}

double sobolev_constant(double q, double r, double area) {
  if (!(q > 1.0) || !(r > 1.0) || !(area > 0.0))
    throw std::invalid_argument("Sobolev constant needs q > 1, r > 1 and positive area");
  const double power = std::pow(area, 0.5 + 1.0 / r - 1.0 / q);
  if (q >= 2.0) {
    if (r < q) throw std::invalid_argument("Sobolev constant needs r >= q when q >= 2");
    return std::max(q, 0.5 * r) / (2.0 * kSqrt2) * power;
  }
  const double qs = sobolev_exponent(q);
  if (r <= q) return qs / (4.0 * kSqrt2) * power;
  if (r > qs * (1.0 + 1e-14)) throw std::invalid_argument("Sobolev constant needs r <= q* when q < 2");
  return std::max(q, 0.5 * r) / (2.0 * kSqrt2) * power;
}

std::vector<std::pair<std::string, double>> KappaTable::entries() const {
  return {{"kappa1", k1}, {"kappa2", k2}, {"kappa3", k3}, {"kappa4", k4},
          {"kappa5", k5}, {"kappa6", k6}, {"re_threshold", re_threshold}};
}

KappaTable kappa_constants(const CrossSection& cs, const FlowParams& prm, double korn_constant) {
  prm.validate();
  if (!(korn_constant > 0.0)) throw std::invalid_argument("Korn constant must be positive");
  KappaTable t;
  t.regime = prm.model().regime();
  t.korn_constant = korn_constant;
  const double p = prm.p, m = cs.m, n = cs.n, area = cs.area, g = std::abs(prm.g);
  if (p >= 2.0) {
    t.k1 = std::sqrt(0.5 * m) * g * area;
    t.k2 = 0.5 * std::pow(m, 1.5) * area * t.k1 * t.k1;
    t.k3 = n * std::pow(m, 1.5) * std::pow(area, 0.75);
    t.k4 = t.k5 = t.k6 = kNaN;
    t.re_threshold = t.k1 > 0.0 ? 2.0 / (t.k1 * t.k3) : std::numeric_limits<double>::infinity();
    return t;
  }
  const double pc = conjugate_exponent(p);
  const double bl1 = cs.b_l1;
  t.k1 = 0.5 * std::pow(m, 1.0 / p) * g * std::pow(area, 1.0 / pc);
  const double bracket = bl1 / (p - 1.0) + std::pow(t.k1, pc);
  t.k2 = t.k1 * std::pow(bracket, (2.0 - p) / p);
  t.k3 = pc * bl1 + std::pow(std::pow(2.0, 0.5 * (2.0 - p)) * t.k1, pc);
  t.k4 = std::pow(2.0, 2.0 - p) * (1.0 + cs.delta * m) * t.k2;
  t.korn_dependent = true;
  if (p < 1.5) {
    t.k5 = t.k6 = t.re_threshold = kNaN;
    return t;
  }
  const double s = sobolev_constant(p, 2.0 * pc, area);
  t.k5 = std::pow(m, 3.0 / p) / korn_constant * s * s * s * t.k4 * t.k4 *
         std::pow(bracket, (2.0 - p) / p);
  t.k6 = 8.0 * std::pow(n, (p + 1.0) / p) * std::pow(m, 6.0 / p) *
         std::pow(1.0 + cs.delta * m, 3.0) / std::pow(korn_constant, 3.0) * s * s;
  t.re_threshold = t.k1 > 0.0
                       ? 1.0 / (2.0 * t.k1 * t.k6) * std::pow(bracket, -2.0 * (2.0 - p) / p)
                       : std::numeric_limits<double>::infinity();
  return t;
}

double SigmaSpec::value(double l) const {
  if (kind == Kind::dean) return c0 * l * l;
  return c0 * std::pow(std::abs(l), alpha);
}

std::optional<double> SigmaSpec::derivative(double l) const {
  if (kind == Kind::dean) return 2.0 * c0 * l;
  if (alpha < 1.0) return std::nullopt;
  if (l == 0.0) return 0.0;
  return c0 * alpha * std::pow(std::abs(l), alpha - 1.0) * (l > 0.0 ? 1.0 : -1.0);
}

std::string to_string(SigmaSpec::Kind k) { return k == SigmaSpec::Kind::dean ? "dean" : "power"; }

SigmaSpec::Kind sigma_kind_from_string(const std::string& s) {
  if (s == "dean") return SigmaSpec::Kind::dean;
  if (s == "power") return SigmaSpec::Kind::power;
  throw std::invalid_argument("unknown sigma kind '" + s + "'");
}

std::pair<double, double> thinning_alpha_range(double p) {
  const double pc = conjugate_exponent(p);
  return {1.0 / pc, sobolev_exponent(p) / (2.0 * pc)};
}

SigmaConstants sigma_constants(double q, double alpha, double area) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("sigma exponent must be non-negative");
  const double qc = conjugate_exponent(q);
  SigmaConstants out;
  if (q >= 2.0) {
    out.d = std::pow(std::max(q / (2.0 * kSqrt2), alpha * q / (4.0 * kSqrt2)), alpha + 1.0) *
            std::pow(area, 1.0 / qc + 0.5 * (alpha + 1.0) - alpha / q);
    out.e = std::pow(std::max(1.0 / kSqrt2, alpha / (2.0 * kSqrt2)), alpha) * std::pow(area, 1.0 / qc);
    return out;
  }
  const double qs = sobolev_exponent(q);
  if (alpha > qs - 1.0)
    throw std::invalid_argument("sigma exponent outside the admissible thinning range");
  out.d = std::pow(sobolev_constant(q, qs, area), alpha + 1.0);
  if (alpha > 1.0 / qc && alpha <= qs / qc) out.e = std::pow(sobolev_constant(q, alpha * qc, area), alpha);
  return out;
}

std::vector<std::pair<std::string, double>> DeanConstants::entries() const {
  return {{"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}};
}

DeanConstants dean_constants(const CrossSection& cs, const FlowParams& prm, const SigmaSpec& sigma,
                             double korn_constant) {
  prm.validate();
  DeanConstants d;
  d.regime = prm.model().regime();
  const double p = prm.p, m = cs.m, area = cs.area, g = std::abs(prm.g), a = sigma.alpha;
  if (p >= 2.0) {
    d.c1 = m * area * g / kSqrt2;
    d.c2 = sigma_constants(2.0, a, area).d * std::pow(d.c1, a) / kSqrt2;
    d.c3 = d.c4 = kNaN;
    return d;
  }
  const double pc = conjugate_exponent(p);
  const auto [lo, hi] = thinning_alpha_range(p);
  d.alpha_admissible = (a > lo && a < hi);
  d.c1 = m * std::pow(area, 1.0 / pc) * g;
  const double qs = sobolev_exponent(p);
  d.c2 = (a <= qs - 1.0 ? sigma_constants(p, a, area).d : kNaN) / (2.0 * korn_constant);
  const double e = (2.0 - p) * (a + 1.0);
  d.c3 = (d.c1 + sigma.c0 * std::pow(d.c1, a) * d.c2) * std::pow(1.0 + area, e / p);
  if (e < 1.0)
    d.c4 = d.c3 * std::pow(1.0 / (1.0 - e) + std::pow(d.c3, 1.0 / (1.0 - e)), e / p);
  else
    d.c4 = kNaN;
  return d;
}

}  // namespace gnf
