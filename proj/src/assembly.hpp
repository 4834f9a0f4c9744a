#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <memory>

#include "gnf/constants.hpp"
#include "gnf/fe_space.hpp"
#include "gnf/solver.hpp"

namespace gnf::detail {

// Weak form of the steady flow problem on one cross-section. With
// curvature > 0 it is the toroidal problem; with curvature 0 and a
// sigma source it is the flattened problem.
struct FlowForm {
  double curvature = 0.0;  // delta inside the differential operators
  PowerLawModel model;
  double re = 0.0;
  std::function<double(double, double)> axial_force;  // multiplies phi3
  const SigmaSpec* sigma = nullptr;
  double sigma_scale = 0.0;  // factor in front of sigma(u3) phi2
  bool sigma_in_jacobian = true;
};

enum class Linearization { none, picard, newton };

struct Assembled {
  Eigen::VectorXd residual;
  double forcing_norm = 0.0;
  Eigen::SparseMatrix<double> jacobian;
};

// Unknown layout: 3 * n_p2 velocity (node-major), n_p1 pressure, one
// multiplier fixing the pressure mean.
inline int n_unknowns(const FeSpace& fe) { return 3 * fe.n_p2() + fe.n_p1() + 1; }

Assembled assemble(const FeSpace& fe, const FlowForm& form, const Eigen::VectorXd& x, Linearization lin,
                   int threads);

struct DriveResult {
  bool converged = false;
  int iterations = 0;
  std::vector<double> history;
  bool monotone = true;
  std::string message;
};

// Damped Picard / Newton iteration on x until the residual test passes.
DriveResult drive(const FeSpace& fe, const FlowForm& form, Eigen::VectorXd& x, const SolverOptions& opts);

class SparseSolver {
 public:
  SparseSolver();
  ~SparseSolver();
  // Returns false when the factorisation fails.
  bool solve(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXd& b, Eigen::VectorXd& x);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gnf::detail
