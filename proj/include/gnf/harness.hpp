#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gnf/dean.hpp"
#include "gnf/solver.hpp"

namespace gnf {

// One checked claim at one parameter point.
struct VerificationRecord {
  std::string claim;
  std::string anchor;
  std::string point;  // "p=..;delta=..;re=..;g=.."
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = true;
  bool conditional = false;  // relies on the configured Korn constant
};

struct ClaimInfo {
  std::string anchor;
  std::string statement;
};

// Every anchor a record may carry.
const std::vector<ClaimInfo>& claim_registry();
bool anchor_registered(const std::string& anchor);

std::string point_label(const FlowParams& prm);

std::vector<VerificationRecord> verify_apriori(const FlowParams& prm, const SolveReport& report);
std::vector<VerificationRecord> verify_dean(const FlowParams& prm, const DeanResult& dean);

struct Unidirectionality {
  bool unidirectional = true;
  double norm = 0.0;  // ||D u||_{2,B} of the in-plane part
};
Unidirectionality unidirectional_check(const CrossSection& cs, const Solution& s, double tol);

struct UniquenessResult {
  double re = 0.0;
  double threshold = 0.0;
  double max_distance = 0.0;
  std::vector<std::string> guesses;
  std::vector<bool> converged;
  bool all_converged() const;
};

// Solves from zero, the axial profile and perturbed axial profiles and
// returns the largest pairwise distance. Throws when params.re is not below
// half of the threshold.
UniquenessResult uniqueness_probe(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                                  int n_guesses, std::uint64_t seed);

// Grid campaign for the a priori bounds of both problems.
struct CampaignSpec {
  std::vector<double> ps{1.5, 2.0, 3.0};
  std::vector<double> deltas{0.0, 0.1, 0.3};
  std::vector<double> re_factors{0.0, 0.3};  // multiples of the uniqueness threshold
  std::vector<double> gs{0.5, 1.0};
  ShapeSpec shape = ShapeSpec::unit_disk();
  double h = 0.05;
  bool full = true;
  bool dean = false;
  std::uint64_t seed = 0;
};

// Dean-problem source used by the campaign: sigma(l) = l^2 for p >= 2 and
// |l|^alpha with alpha at the middle of the admissible range otherwise.
SigmaSpec campaign_sigma(double p);

struct CampaignResult {
  std::vector<VerificationRecord> records;
  int points = 0;
  int unconverged = 0;
  std::vector<std::string> notes;
  bool all_pass() const;
};

CampaignResult run_apriori_campaign(const CampaignSpec& spec, const SolverOptions& opts);

// Fuzz suites. Violations are counted, never thrown.
struct FuzzEntry {
  std::string claim;
  std::string anchor;
  std::string point;
  long samples = 0;
  long violations = 0;
  double worst = 0.0;  // smallest relative margin seen
  bool conditional = false;
};

struct FuzzSummary {
  std::vector<FuzzEntry> entries;
  long violations(bool include_conditional = false) const;
  void append(const FuzzSummary& o);
};

// Relative tolerance of integral checks, which carry quadrature error.
inline constexpr double kQuadratureSlack = 1e-8;
// Relative tolerance of the Korn identities.
inline constexpr double kIdentityTolerance = 1e-6;

SymTensor3 random_tensor(std::mt19937_64& rng, double amplitude);
// Interior coefficients uniform in [-1, 1], boundary coefficients zero.
VelocityField random_velocity(const FeSpace& fe, std::mt19937_64& rng);
// Exactly B-divergence-free field on the unit disk built from a random
// stream function that vanishes to second order on the circle.
QuadField random_div_free_field(const CrossSection& cs, std::mt19937_64& rng);

FuzzSummary fuzz_tensors(std::uint64_t seed, int n, const std::vector<double>& ps);
FuzzSummary fuzz_korn(std::uint64_t seed, int n, const std::vector<double>& deltas, double h,
                      double korn_constant = kDefaultKornConstant);
FuzzSummary fuzz_poincare(std::uint64_t seed, int n, const std::vector<double>& deltas, double h);
FuzzSummary fuzz_sobolev(std::uint64_t seed, int n, double h);
FuzzSummary fuzz_sigma(std::uint64_t seed, int n, double h);
FuzzSummary fuzz_field_estimates(std::uint64_t seed, int n, const std::vector<double>& ps,
                                 const std::vector<double>& deltas, double h,
                                 double korn_constant = kDefaultKornConstant);

struct FuzzOptions {
  int n_tensors = 10000;
  int n_fields = 100;
  std::vector<double> deltas{0.0, 0.3, 0.7};
  double h = 0.1;
};
FuzzSummary fuzz_inequalities(std::uint64_t seed, const std::vector<double>& ps, const FuzzOptions& opts);

// Observed order of central differences against tau_jacobian for each
// random pair, fitted over the given steps.
std::vector<double> jacobian_orders(std::uint64_t seed, int n, double p, const std::vector<double>& steps);

// Plain-text outputs; numbers use a fixed format so reruns are identical.
std::string format_number(double x);
std::string records_csv(const std::vector<VerificationRecord>& records);
std::string fuzz_csv(const FuzzSummary& s);
std::string study_csv(const StudyResult& s);
void write_text(const std::string& path, const std::string& text);

}  // namespace gnf
