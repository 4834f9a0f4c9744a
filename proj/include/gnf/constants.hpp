#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnf/cross_section.hpp"

namespace gnf {

inline constexpr double kDefaultKornConstant = 0.70710678118654752440;  // 1/sqrt(2)

double conjugate_exponent(double q);  // q' = q / (q - 1)
double sobolev_exponent(double q);    // q* = 2q / (2 - q), q < 2

// Constant of ||u||_r <= S ||grad u||_q on a domain of the given area.
double sobolev_constant(double q, double r, double area);

// Named constants of the a priori estimates for one parameter set.
struct KappaTable {
  Rheology regime = Rheology::newtonian;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0, k5 = 0.0, k6 = 0.0;
  double re_threshold = 0.0;   // uniqueness holds below this Reynolds number
  bool korn_dependent = false; // k5, k6 and the threshold rely on the Korn constant
  double korn_constant = kDefaultKornConstant;

  std::vector<std::pair<std::string, double>> entries() const;
};

// Thickening (p >= 2) and thinning (3/2 <= p < 2) tables. For p < 3/2 the
// Korn-dependent entries and the threshold are NaN.
KappaTable kappa_constants(const CrossSection& cs, const FlowParams& prm,
                           double korn_constant = kDefaultKornConstant);

// Source term sigma of the flattened problem, |sigma(l)| <= c0 |l|^alpha.
struct SigmaSpec {
  enum class Kind { dean, power };
  Kind kind = Kind::dean;
  double c0 = 0.0;
  double alpha = 2.0;

  static SigmaSpec dean(double re) { return {Kind::dean, re, 2.0}; }
  static SigmaSpec power(double c0, double alpha) { return {Kind::power, c0, alpha}; }

  double value(double l) const;
  // Derivative, or nullopt where it is not usable for linearisation.
  std::optional<double> derivative(double l) const;
};

std::string to_string(SigmaSpec::Kind k);
SigmaSpec::Kind sigma_kind_from_string(const std::string& s);

// Constants D and E of the sigma estimates for exponent q.
struct SigmaConstants {
  double d = 0.0;
  std::optional<double> e;  // absent when alpha is outside its admissible range
};

SigmaConstants sigma_constants(double q, double alpha, double area);

// Admissible alpha interval for the flattened thinning estimates.
std::pair<double, double> thinning_alpha_range(double p);

// Constants of the bounds on the flattened solution.
struct DeanConstants {
  Rheology regime = Rheology::newtonian;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
  bool alpha_admissible = true;
  std::vector<std::pair<std::string, double>> entries() const;
};

DeanConstants dean_constants(const CrossSection& cs, const FlowParams& prm, const SigmaSpec& sigma,
                             double korn_constant = kDefaultKornConstant);

}  // namespace gnf
