#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <vector>

#include "gnf/cross_section.hpp"
#include "gnf/tensor.hpp"

namespace gnf {

// Value and in-plane gradient of a 3-vector field at one point;
// du[j][i] is the derivative of component i along x_{j+1}.
struct PointValue {
  std::array<double, 3> u{};
  std::array<std::array<double, 3>, 2> du{};
};

// Fields sampled at every quadrature point of a space, in cell-major order.
using QuadField = std::vector<PointValue>;
using QuadScalar = std::vector<double>;
using QuadTensor = std::vector<SymTensor3>;

// P2 velocity, node-major: entry 3 * node + component.
struct VelocityField {
  Eigen::VectorXd coef;

  static VelocityField zero(const FeSpace& fe) { return {Eigen::VectorXd::Zero(3 * fe.n_p2())}; }
  double& at(int node, int comp) { return coef[3 * node + comp]; }
  double at(int node, int comp) const { return coef[3 * node + comp]; }
};

// P1 pressure on the vertices.
struct PressureField {
  Eigen::VectorXd coef;

  static PressureField zero(const FeSpace& fe) { return {Eigen::VectorXd::Zero(fe.n_p1())}; }
};

// P2 scalar field.
struct ScalarField {
  Eigen::VectorXd coef;

  static ScalarField zero(const FeSpace& fe) { return {Eigen::VectorXd::Zero(fe.n_p2())}; }
};

QuadField evaluate(const FeSpace& fe, const VelocityField& u);
QuadScalar evaluate(const FeSpace& fe, const PressureField& pi);
// Scalar P2 field placed in the axial component.
QuadField evaluate_axial(const FeSpace& fe, const ScalarField& s);

using PointFunction = std::function<PointValue(double x1, double x2)>;
QuadField sample(const FeSpace& fe, const PointFunction& f);
QuadScalar sample_scalar(const FeSpace& fe, const std::function<double(double, double)>& f);

// Nodal interpolation; boundary nodes are left as returned by f.
VelocityField interpolate(const FeSpace& fe, const std::function<std::array<double, 3>(double, double)>& f);

// (integral of B^w |f|^q)^(1/q) with w = 1 (weighted) or 0.
double lq_norm(const CrossSection& cs, const QuadScalar& magnitude, double q, bool weighted);
inline double weighted_norm(const CrossSection& cs, const QuadScalar& magnitude, double q) {
  return lq_norm(cs, magnitude, q, true);
}
double integral(const CrossSection& cs, const QuadScalar& values, bool weighted);

QuadScalar magnitudes(const QuadTensor& t);
QuadScalar vector_magnitude(const QuadField& f);
QuadScalar component(const QuadField& f, int i);
QuadScalar difference(const QuadScalar& a, const QuadScalar& b);
QuadField difference(const QuadField& a, const QuadField& b);
QuadTensor difference(const QuadTensor& a, const QuadTensor& b);

}  // namespace gnf
