#pragma once

#include <array>
#include <string>
#include <vector>

namespace gnf {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Symmetric 3x3 tensor stored as (11, 22, 33, 12, 13, 23).
struct SymTensor3 {
  std::array<double, 6> c{};

  SymTensor3() = default;
  SymTensor3(double d11, double d22, double d33, double d12, double d13, double d23)
      : c{d11, d22, d33, d12, d13, d23} {}

  // Symmetric part of an arbitrary matrix.
  static SymTensor3 sym(const Mat3& a);

  double operator()(int i, int j) const;
  Mat3 to_matrix() const;

  SymTensor3& operator+=(const SymTensor3& o);
  SymTensor3& operator-=(const SymTensor3& o);
  SymTensor3& operator*=(double s);
};

SymTensor3 operator+(SymTensor3 a, const SymTensor3& b);
SymTensor3 operator-(SymTensor3 a, const SymTensor3& b);
SymTensor3 operator*(double s, SymTensor3 a);

// Frobenius product; off-diagonal entries count twice.
double ddot(const SymTensor3& a, const SymTensor3& b);
double norm(const SymTensor3& a);

enum class Rheology { thinning, newtonian, thickening };

struct PowerLawModel {
  double p = 2.0;
  double gamma_dot = 1.0;

  void validate() const;  // throws std::invalid_argument
  Rheology regime() const;
};

std::string to_string(Rheology r);

// Extra stress 2 (1 + gd^2 |eta|^2)^((p-2)/2) eta.
SymTensor3 tau(const PowerLawModel& m, const SymTensor3& eta);

// Directional derivative of tau at eta along xi.
SymTensor3 tau_jacobian(const PowerLawModel& m, const SymTensor3& eta, const SymTensor3& xi);

// Effective viscosity factor (1 + gd^2 |eta|^2)^((p-2)/2).
double viscosity_factor(const PowerLawModel& m, double eta_norm_sq);

// One pointwise inequality evaluated on a sample.
struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // relative margin, negative when violated
  bool holds = true;
};

constexpr double kSlackFloor = 1e-12;

// lhs <= rhs up to the relative slack floor.
InequalityCheck check_le(std::string name, double lhs, double rhs);
// lhs >= rhs up to the relative slack floor.
InequalityCheck check_ge(std::string name, double lhs, double rhs);

// Structural properties of tau at a pair of tensors. The thickening set
// needs p >= 2, the thinning set 1 < p < 2.
std::vector<InequalityCheck> check_thickening_properties(const PowerLawModel& m,
                                                         const SymTensor3& eta,
                                                         const SymTensor3& zeta);
std::vector<InequalityCheck> check_thinning_properties(const PowerLawModel& m,
                                                       const SymTensor3& eta,
                                                       const SymTensor3& zeta);

// C_p = 1 + 2^((2-p)/2). The bound on tau = 2 S uses 2 C_p; C_p alone is
// the constant for S = (1 + |eta|^2)^((p-2)/2) eta.
double thinning_continuity_constant(double p);

// Continuity with the constant of S instead of tau, i.e. without the factor
// 2. Fails on many pairs; kept to report how often.
InequalityCheck continuity_without_factor_two(const PowerLawModel& m, const SymTensor3& eta,
                                             const SymTensor3& zeta);

}  // namespace gnf
