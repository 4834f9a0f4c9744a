#pragma once

#include <vector>

namespace gnf {

// Point on the reference triangle (0,0), (1,0), (0,1); weights sum to 1/2.
struct TriQuadPoint {
  double xi;
  double eta;
  double w;
};

// Symmetric 12-point rule, exact for polynomials of total degree 6.
const std::vector<TriQuadPoint>& triangle_rule();

}  // namespace gnf
