#include "gnf/output.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gnf {

namespace {

std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string vtk_text(const CrossSection& cs, const Solution& s) {
  const FeSpace& fe = cs.fe();
  const Mesh& m = fe.mesh();
  const int np = fe.n_p2(), nc = fe.n_cells();
  std::ostringstream o;
  o << "# vtk DataFile Version 3.0\ncurved pipe cross-section\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  o << "POINTS " << np << " double\n";
  for (int k = 0; k < np; ++k) o << full(fe.node(k)[0]) << ' ' << full(fe.node(k)[1]) << " 0\n";
  o << "CELLS " << nc << ' ' << 7 * nc << '\n';
  for (int c = 0; c < nc; ++c) {
    o << 6;
    for (int k : fe.p2_nodes(c)) o << ' ' << k;
    o << '\n';
  }
  o << "CELL_TYPES " << nc << '\n';
  for (int c = 0; c < nc; ++c) o << "22\n";
  o << "POINT_DATA " << np << "\nVECTORS velocity double\n";
  for (int k = 0; k < np; ++k)
    o << full(s.u.at(k, 0)) << ' ' << full(s.u.at(k, 1)) << ' ' << full(s.u.at(k, 2)) << '\n';
  o << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  const int nv = m.n_vertices();
  for (int k = 0; k < np; ++k) {
    double v;
    if (k < nv) {
      v = s.pi.coef[k];
    } else {
      const auto& e = m.edges[k - nv];
      v = 0.5 * (s.pi.coef[e[0]] + s.pi.coef[e[1]]);
    }
    o << full(v) << '\n';
  }
  return o.str();
}

std::string coefficients_text(const Solution& s) {
  std::ostringstream o;
  const long n = s.u.coef.size() / 3;
  o << "velocity " << n << '\n';
  for (long k = 0; k < n; ++k)
    o << full(s.u.coef[3 * k]) << ' ' << full(s.u.coef[3 * k + 1]) << ' ' << full(s.u.coef[3 * k + 2]) << '\n';
  o << "pressure " << s.pi.coef.size() << '\n';
  for (long k = 0; k < s.pi.coef.size(); ++k) o << full(s.pi.coef[k]) << '\n';
  return o.str();
}

Solution parse_coefficients(const std::string& text) {
  std::istringstream in(text);
  std::string key;
  long n = 0, m = 0;
  if (!(in >> key >> n) || key != "velocity" || n < 0) throw std::runtime_error("coefficients: bad velocity header");
  Solution s;
  s.u.coef.resize(3 * n);
  for (long k = 0; k < 3 * n; ++k)
    if (!(in >> s.u.coef[k])) throw std::runtime_error("coefficients: truncated velocity");
  if (!(in >> key >> m) || key != "pressure" || m < 0) throw std::runtime_error("coefficients: bad pressure header");
  s.pi.coef.resize(m);
  for (long k = 0; k < m; ++k)
    if (!(in >> s.pi.coef[k])) throw std::runtime_error("coefficients: truncated pressure");
  return s;
}

std::string report_json(const CrossSection& cs, const SolveReport& r, const SolverOptions& opts) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["params"] = {{"p", r.params.p},      {"delta", r.params.delta}, {"re", r.params.re},
                 {"g", r.params.g},      {"gamma_dot", r.params.gamma_dot},
                 {"regime", to_string(r.params.model().regime())}};
  j["mesh"] = {{"shape", to_string(cs.shape.kind)}, {"h", cs.h},         {"cells", cs.fe().n_cells()},
               {"area", cs.area},                   {"m", cs.m},         {"n", cs.n}};
  j["solver"] = {{"scheme", to_string(opts.scheme)},  {"rtol", opts.rtol},
                 {"atol", opts.atol},                 {"max_iter", opts.max_iter},
                 {"initial", to_string(opts.initial)}, {"korn_constant", opts.korn_constant}};
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["residual_history"] = r.residual_history;
  j["monotone"] = r.monotone;
  j["seconds"] = r.seconds;
  if (!r.message.empty()) j["message"] = r.message;
  ordered_json k = ordered_json::object();
  for (const auto& [name, v] : r.kappa.entries()) k[name] = std::isfinite(v) ? ordered_json(v) : ordered_json();
  k["korn_dependent"] = r.kappa.korn_dependent;
  j["constants"] = k;
  j["uniqueness_guaranteed"] = r.uniqueness_guaranteed;
  j["norms"] = r.norms;
  ordered_json b = ordered_json::array();
  for (const BoundCheck& c : r.bounds)
    b.push_back({{"claim", c.claim}, {"anchor", c.anchor}, {"lhs", c.lhs}, {"rhs", c.rhs},
                 {"holds", c.holds}, {"conditional", c.korn_dependent}});
  j["bounds"] = b;
  return j.dump(2) + "\n";
}

}  // namespace gnf
