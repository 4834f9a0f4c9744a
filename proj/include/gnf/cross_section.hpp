#pragma once

#include <memory>

#include "gnf/fe_space.hpp"
#include "gnf/mesh.hpp"
#include "gnf/tensor.hpp"

namespace gnf {

// Physical parameters of one run.
struct FlowParams {
  double p = 2.0;
  double delta = 0.0;   // curvature ratio
  double re = 0.0;      // Reynolds number
  double g = 1.0;       // axial pressure gradient
  double gamma_dot = 1.0;

  PowerLawModel model() const { return {p, gamma_dot}; }
  void validate() const;  // throws std::invalid_argument
};

// Discretised pipe cross-section together with the geometric constants of
// the curvature weight B(x) = 1 + delta x2.
struct CrossSection {
  std::shared_ptr<const FeSpace> space;
  ShapeSpec shape;
  double h = 0.0;
  double delta = 0.0;
  double m = 1.0;     // sup 1/B
  double n = 1.0;     // sup B
  double area = 0.0;  // |Sigma|
  double b_l1 = 0.0;  // integral of B

  double weight(double x2) const { return 1.0 + delta * x2; }
  const FeSpace& fe() const { return *space; }

  // Same triangulation with another curvature ratio.
  CrossSection with_delta(double d) const;
};

CrossSection build_cross_section(const ShapeSpec& shape, double delta, double h);
CrossSection make_cross_section(std::shared_ptr<const FeSpace> space, const ShapeSpec& shape,
                                double h, double delta);

}  // namespace gnf
