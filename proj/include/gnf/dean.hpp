#pragma once

#include <limits>
#include <string>
#include <vector>

#include "gnf/solver.hpp"

namespace gnf {

// Flattened problem: Cartesian operators, axial forcing G/B and the
// in-plane source delta sigma(w3).
struct DeanResult {
  Solution solution;
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;
  std::string message;
  DeanConstants constants;
  std::map<std::string, double> norms;
  std::vector<BoundCheck> bounds;
};

DeanResult solve_dean(const CrossSection& cs, const FlowParams& params, const SigmaSpec& sigma,
                      const SolverOptions& opts, const Solution* guess = nullptr);

std::map<std::string, double> dean_norms(const CrossSection& cs, const FlowParams& params, const Solution& w);
std::vector<BoundCheck> dean_bounds(const CrossSection& cs, const FlowParams& params, const SigmaSpec& sigma,
                                    const std::map<std::string, double>& norms, double korn_constant);

inline constexpr double kNotAvailable = std::numeric_limits<double>::quiet_NaN();

struct StudyRow {
  double p = 2.0;
  double re = 0.0;
  double delta = 0.0;
  double de = 0.0;  // sqrt(delta) Re
  double du_l2b = kNotAvailable;
  double dw_l2 = kNotAvailable;
  double diff_d2 = kNotAvailable;
  double diff_dp = kNotAvailable;
  double bound_ratio = kNotAvailable;
  bool converged = false;
  bool uniqueness_guaranteed = false;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  double slope_d2 = kNotAvailable;
  double slope_dp = kNotAvailable;
  std::vector<std::string> flags;  // hypotheses that failed but did not stop the run
};

// Secondary-flow magnitude against delta Re on the full problem; the slope
// is fitted in log-log over all rows.
StudyResult dean_scaling_study(const CrossSection& cs, const FlowParams& base, const std::vector<double>& res,
                               const std::vector<double>& deltas, const SolverOptions& opts);

// Distance between the full and flattened solutions as delta shrinks.
// Throws when Re exceeds half of the uniqueness threshold at the largest
// delta.
StudyResult delta_approx_study(const CrossSection& cs, const FlowParams& base, const SigmaSpec& sigma,
                               const std::vector<double>& deltas, const SolverOptions& opts);

// Least-squares slope of log y against log x over pairs with positive
// entries.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gnf
