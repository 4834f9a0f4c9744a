#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnf/mesh.hpp"
#include "gnf/solver.hpp"

namespace gnf {

// Everything a CLI run needs. Parameter fields are lists so that studies
// and campaigns can sweep them; single runs use the first entry.
struct RunConfig {
  std::string command = "solve";  // e.g. "solve", "verify tensors", "study dean"
  std::vector<double> p{2.0};
  std::vector<double> delta{0.0};
  std::vector<double> re{0.0};
  std::vector<double> g{1.0};
  double gamma_dot = 1.0;
  ShapeSpec shape;
  double h = 0.05;
  SolverOptions solver;
  SigmaSpec::Kind sigma = SigmaSpec::Kind::dean;
  std::optional<double> sigma_c0;  // defaults to Re for the Dean source
  double sigma_alpha = 2.0;
  int n = 100;  // samples for the fuzz suites
  std::uint64_t seed = 0;
  std::string out_dir = "gnf_out";
  std::string grid = "default";

  FlowParams first_params() const;
  SigmaSpec sigma_spec(double re_value) const;
  void validate() const;  // throws std::invalid_argument
};

// Canonical "key = value" text, one key per line in a fixed order.
std::string to_canonical(const RunConfig& c);
// Reads "key = value" lines on top of base; '#' starts a comment. Unknown
// keys and malformed values throw std::invalid_argument.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

std::string canonical_number(double x);
std::vector<double> parse_list(const std::string& s);

}  // namespace gnf
