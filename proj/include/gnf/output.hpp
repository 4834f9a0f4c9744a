#pragma once

#include <string>

#include "gnf/solver.hpp"

namespace gnf {

// Legacy ASCII VTK with quadratic triangles; pressure is extended to edge
// nodes by averaging the two endpoints.
std::string vtk_text(const CrossSection& cs, const Solution& s);

// Coefficients at full precision: "velocity N" then N lines "u1 u2 u3",
// "pressure M" then M values.
std::string coefficients_text(const Solution& s);
Solution parse_coefficients(const std::string& text);

// JSON summary of a solve: parameters, convergence, constants, norms and
// bound records.
std::string report_json(const CrossSection& cs, const SolveReport& report, const SolverOptions& opts);

}  // namespace gnf
