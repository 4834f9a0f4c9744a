#include "gnf/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace gnf {

QuadField evaluate(const FeSpace& fe, const VelocityField& u) {
  if (u.coef.size() != 3 * fe.n_p2()) throw std::invalid_argument("velocity size does not match space");
  QuadField out(fe.n_qp());
  const int nq = fe.n_qp_per_cell();
  for (int c = 0; c < fe.n_cells(); ++c) {
    const auto nodes = fe.p2_nodes(c);
    for (int q = 0; q < nq; ++q) {
      const auto& p = fe.qp(c, q);
      PointValue& v = out[c * nq + q];
      for (int a = 0; a < 6; ++a) {
        const double na = fe.n(q, a);
        for (int i = 0; i < 3; ++i) {
          const double ui = u.coef[3 * nodes[a] + i];
          v.u[i] += na * ui;
          v.du[0][i] += p.dn[2 * a] * ui;
          v.du[1][i] += p.dn[2 * a + 1] * ui;
        }
      }
    }
  }
  return out;
}

QuadScalar evaluate(const FeSpace& fe, const PressureField& pi) {
  if (pi.coef.size() != fe.n_p1()) throw std::invalid_argument("pressure size does not match space");
  QuadScalar out(fe.n_qp(), 0.0);
  const int nq = fe.n_qp_per_cell();
  for (int c = 0; c < fe.n_cells(); ++c) {
    const auto& nodes = fe.p1_nodes(c);
    for (int q = 0; q < nq; ++q)
      for (int a = 0; a < 3; ++a) out[c * nq + q] += fe.l(q, a) * pi.coef[nodes[a]];
  }
  return out;
}

QuadField evaluate_axial(const FeSpace& fe, const ScalarField& s) {
  VelocityField u = VelocityField::zero(fe);
  for (int k = 0; k < fe.n_p2(); ++k) u.at(k, 2) = s.coef[k];
  return evaluate(fe, u);
}

QuadField sample(const FeSpace& fe, const PointFunction& f) {
  QuadField out(fe.n_qp());
  for (int g = 0; g < fe.n_qp(); ++g) out[g] = f(fe.qp(g).x1, fe.qp(g).x2);
  return out;
}

QuadScalar sample_scalar(const FeSpace& fe, const std::function<double(double, double)>& f) {
  QuadScalar out(fe.n_qp());
  for (int g = 0; g < fe.n_qp(); ++g) out[g] = f(fe.qp(g).x1, fe.qp(g).x2);
  return out;
}

VelocityField interpolate(const FeSpace& fe, const std::function<std::array<double, 3>(double, double)>& f) {
  VelocityField u = VelocityField::zero(fe);
  for (int k = 0; k < fe.n_p2(); ++k) {
    const auto v = f(fe.node(k)[0], fe.node(k)[1]);
    for (int i = 0; i < 3; ++i) u.at(k, i) = v[i];
  }
  return u;
}

double lq_norm(const CrossSection& cs, const QuadScalar& mag, double q, bool weighted) {
  const FeSpace& fe = cs.fe();
  if (static_cast<int>(mag.size()) != fe.n_qp()) throw std::invalid_argument("field size does not match space");
  if (!(q >= 1.0)) throw std::invalid_argument("norm exponent must be at least 1");
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) {
    const auto& p = fe.qp(g);
    const double w = weighted ? p.w * cs.weight(p.x2) : p.w;
    const double a = std::abs(mag[g]);
    s += w * (q == 2.0 ? a * a : std::pow(a, q));
  }
  return q == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / q);
}

double integral(const CrossSection& cs, const QuadScalar& values, bool weighted) {
  const FeSpace& fe = cs.fe();
  double s = 0.0;
  for (int g = 0; g < fe.n_qp(); ++g) {
    const auto& p = fe.qp(g);
    s += (weighted ? p.w * cs.weight(p.x2) : p.w) * values[g];
  }
  return s;
}

QuadScalar magnitudes(const QuadTensor& t) {
  QuadScalar out(t.size());
  for (std::size_t g = 0; g < t.size(); ++g) out[g] = norm(t[g]);
  return out;
}

QuadScalar vector_magnitude(const QuadField& f) {
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g)
    out[g] = std::sqrt(f[g].u[0] * f[g].u[0] + f[g].u[1] * f[g].u[1] + f[g].u[2] * f[g].u[2]);
  return out;
}

QuadScalar component(const QuadField& f, int i) {
  QuadScalar out(f.size());
  for (std::size_t g = 0; g < f.size(); ++g) out[g] = f[g].u[i];
  return out;
}

QuadScalar difference(const QuadScalar& a, const QuadScalar& b) {
  QuadScalar out(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) out[g] = a[g] - b[g];
  return out;
}

QuadField difference(const QuadField& a, const QuadField& b) {
  QuadField out(a.size());
  for (std::size_t g = 0; g < a.size(); ++g)
    for (int i = 0; i < 3; ++i) {
      out[g].u[i] = a[g].u[i] - b[g].u[i];
      out[g].du[0][i] = a[g].du[0][i] - b[g].du[0][i];
      out[g].du[1][i] = a[g].du[1][i] - b[g].du[1][i];
    }
  return out;
}

QuadTensor difference(const QuadTensor& a, const QuadTensor& b) {
  QuadTensor out(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) out[g] = a[g] - b[g];
  return out;
}

}  // namespace gnf
