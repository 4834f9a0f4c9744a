#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnf/constants.hpp"
#include "gnf/fields.hpp"

namespace gnf {

enum class Scheme { picard, newton, picard_newton };
enum class InitialGuess { zero, axial_poiseuille, supplied };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);
std::string to_string(InitialGuess g);
InitialGuess initial_guess_from_string(const std::string& s);

struct SolverOptions {
  Scheme scheme = Scheme::picard_newton;
  double damping = 1.0;   // first step length tried by the line search
  double rtol = 1e-10;    // on ||residual|| / ||forcing||
  double atol = 1e-13;
  int max_iter = 60;
  InitialGuess initial = InitialGuess::axial_poiseuille;
  int continuation_steps = 0;  // ladder from p = 2, Re = 0 when positive
  double korn_constant = kDefaultKornConstant;
  int threads = 1;

  void validate() const;
};

struct Solution {
  VelocityField u;
  PressureField pi;
};

// One a priori bound evaluated on a computed field.
struct BoundCheck {
  std::string claim;   // short identifier
  std::string anchor;  // entry of the claim registry
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  bool korn_dependent = false;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;  // relative residual per iteration
  bool monotone = true;
  double seconds = 0.0;
  FlowParams params;
  KappaTable kappa;
  bool uniqueness_guaranteed = false;
  std::map<std::string, double> norms;
  std::vector<BoundCheck> bounds;
  std::string message;
};

struct SolveResult {
  Solution solution;
  SolveReport report;
};

// Full toroidal problem on the cross-section (cs.delta must equal
// params.delta). On non-convergence the last iterate is returned with
// report.converged = false.
SolveResult solve_full(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                       const Solution* guess = nullptr);

// Unidirectional problem for the axial component alone.
ScalarField axial_only_solve(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                             int* iterations = nullptr);

// Norms of a computed flow used by reports and bounds.
std::map<std::string, double> flow_norms(const CrossSection& cs, const FlowParams& params, const Solution& s);

// A priori bounds for the given norms; Korn-dependent entries are flagged.
std::vector<BoundCheck> apriori_bounds(const CrossSection& cs, const FlowParams& params,
                                       const std::map<std::string, double>& norms, double korn_constant);

// Ratio ||pi||_{p'} / (bracket of velocity norms); finite when the bracket
// is positive, 0 when both vanish.
struct PressureEstimate {
  double lhs = 0.0;
  double bracket = 0.0;
  double ratio = 0.0;
};
PressureEstimate check_pressure_estimate(const CrossSection& cs, const FlowParams& params, const Solution& s);

// ||D*(a - b)||_{2,B}.
double solution_distance(const CrossSection& cs, const Solution& a, const Solution& b);

}  // namespace gnf
