#include "gnf/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gnf {

std::string canonical_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  double x = 0.0;
  const auto r = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
    throw std::invalid_argument("'" + key + "': not a number: '" + t + "'");
  return x;
}

long parse_integer(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  long x = 0;
  const auto r = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
    throw std::invalid_argument("'" + key + "': not an integer: '" + t + "'");
  return x;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + canonical_number(v[i]);
  return s;
}

}  // namespace

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number("list", item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

FlowParams RunConfig::first_params() const {
  FlowParams f;
  f.p = p.at(0);
  f.delta = delta.at(0);
  f.re = re.at(0);
  f.g = g.at(0);
  f.gamma_dot = gamma_dot;
  return f;
}

SigmaSpec RunConfig::sigma_spec(double re_value) const {
  if (sigma == SigmaSpec::Kind::dean) return SigmaSpec::dean(sigma_c0.value_or(re_value));
  return SigmaSpec::power(sigma_c0.value_or(1.0), sigma_alpha);
}

void RunConfig::validate() const {
  if (p.empty() || delta.empty() || re.empty() || g.empty()) throw std::invalid_argument("parameter lists must be non-empty");
  for (double pv : p)
    for (double dv : delta)
      for (double rv : re)
        for (double gv : g) {
          FlowParams f{pv, dv, rv, gv, gamma_dot};
          f.validate();
        }
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("mesh size h must lie in (0, 1]");
  if (shape.kind == ShapeKind::rectangle && !(shape.a > 0.0 && shape.b > 0.0))
    throw std::invalid_argument("rectangle sides must be positive");
  if (shape.kind == ShapeKind::external && shape.file.empty()) throw std::invalid_argument("mesh file missing");
  if (!(sigma_alpha > 0.0)) throw std::invalid_argument("sigma exponent must be positive");
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  solver.validate();
}

std::string to_canonical(const RunConfig& c) {
  std::ostringstream o;
  o << "command = " << c.command << '\n'
    << "p = " << join(c.p) << '\n'
    << "delta = " << join(c.delta) << '\n'
    << "re = " << join(c.re) << '\n'
    << "g = " << join(c.g) << '\n'
    << "gamma_dot = " << canonical_number(c.gamma_dot) << '\n'
    << "shape = " << to_string(c.shape.kind) << '\n'
    << "rect_a = " << canonical_number(c.shape.a) << '\n'
    << "rect_b = " << canonical_number(c.shape.b) << '\n'
    << "mesh_file = " << c.shape.file << '\n'
    << "h = " << canonical_number(c.h) << '\n'
    << "scheme = " << to_string(c.solver.scheme) << '\n'
    << "damping = " << canonical_number(c.solver.damping) << '\n'
    << "rtol = " << canonical_number(c.solver.rtol) << '\n'
    << "atol = " << canonical_number(c.solver.atol) << '\n'
    << "max_iter = " << c.solver.max_iter << '\n'
    << "initial = " << to_string(c.solver.initial) << '\n'
    << "continuation = " << c.solver.continuation_steps << '\n'
    << "korn_constant = " << canonical_number(c.solver.korn_constant) << '\n'
    << "threads = " << c.solver.threads << '\n'
    << "sigma = " << to_string(c.sigma) << '\n'
    << "sigma_c0 = " << (c.sigma_c0 ? canonical_number(*c.sigma_c0) : std::string("auto")) << '\n'
    << "sigma_alpha = " << canonical_number(c.sigma_alpha) << '\n'
    << "n = " << c.n << '\n'
    << "seed = " << c.seed << '\n'
    << "grid = " << c.grid << '\n'
    << "out_dir = " << c.out_dir << '\n';
  return o.str();
}

RunConfig parse_config(const std::string& text, RunConfig c) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "command") c.command = v;
    else if (k == "p") c.p = parse_list(v);
    else if (k == "delta") c.delta = parse_list(v);
    else if (k == "re") c.re = parse_list(v);
    else if (k == "g") c.g = parse_list(v);
    else if (k == "gamma_dot") c.gamma_dot = parse_number(k, v);
    else if (k == "shape") c.shape.kind = shape_kind_from_string(v);
    else if (k == "rect_a") c.shape.a = parse_number(k, v);
    else if (k == "rect_b") c.shape.b = parse_number(k, v);
    else if (k == "mesh_file") c.shape.file = v;
    else if (k == "h") c.h = parse_number(k, v);
    else if (k == "scheme") c.solver.scheme = scheme_from_string(v);
    else if (k == "damping") c.solver.damping = parse_number(k, v);
    else if (k == "rtol") c.solver.rtol = parse_number(k, v);
    else if (k == "atol") c.solver.atol = parse_number(k, v);
    else if (k == "max_iter") c.solver.max_iter = static_cast<int>(parse_integer(k, v));
    else if (k == "initial") c.solver.initial = initial_guess_from_string(v);
    else if (k == "continuation") c.solver.continuation_steps = static_cast<int>(parse_integer(k, v));
    else if (k == "korn_constant") c.solver.korn_constant = parse_number(k, v);
    else if (k == "threads") c.solver.threads = static_cast<int>(parse_integer(k, v));
    else if (k == "sigma") c.sigma = sigma_kind_from_string(v);
    else if (k == "sigma_c0") c.sigma_c0 = v == "auto" ? std::nullopt : std::optional<double>(parse_number(k, v));
    else if (k == "sigma_alpha") c.sigma_alpha = parse_number(k, v);
    else if (k == "n") c.n = static_cast<int>(parse_integer(k, v));
    else if (k == "seed") {
      const long s = parse_integer(k, v);
      if (s < 0) throw std::invalid_argument("'seed': must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    }
    else if (k == "grid") c.grid = v;
    else if (k == "out_dir") c.out_dir = v;
    else throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + k + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace gnf
