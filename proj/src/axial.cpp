#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gnf/parallel.hpp"
#include "gnf/solver.hpp"

namespace gnf {

namespace {

struct AxialCell {
  std::array<double, 6> r{};
  std::array<double, 36> k{};
  std::array<double, 6> f{};
};

// Weak form (mu(g) g, B grad* phi) = (G, phi) with g = grad* u3 =
// (d1 u3, d2 u3 - delta/B u3) and mu = (1 + gd^2 |g|^2 / 2)^((p-2)/2).
void axial_cell(const CrossSection& cs, const FlowParams& prm, const Eigen::VectorXd& x, int c, bool jac,
                AxialCell& out) {
  const FeSpace& fe = cs.fe();
  const auto nodes = fe.p2_nodes(c);
  const double p = prm.p, g2 = prm.gamma_dot * prm.gamma_dot, dl = prm.delta;
  for (int q = 0; q < fe.n_qp_per_cell(); ++q) {
    const auto& qp = fe.qp(c, q);
    const double b = 1.0 + dl * qp.x2, kap = dl / b;
    double gs[6][2];
    double g[2] = {0.0, 0.0};
    for (int a = 0; a < 6; ++a) {
      gs[a][0] = qp.dn[2 * a];
      gs[a][1] = qp.dn[2 * a + 1] - kap * fe.n(q, a);
      g[0] += gs[a][0] * x[nodes[a]];
      g[1] += gs[a][1] * x[nodes[a]];
    }
    const double s = 1.0 + 0.5 * g2 * (g[0] * g[0] + g[1] * g[1]);
    const double mu = p == 2.0 ? 1.0 : std::pow(s, 0.5 * (p - 2.0));
    const double dmu = p == 2.0 ? 0.0 : 0.5 * (p - 2.0) * g2 * mu / s;
    const double wb = qp.w * b;
    for (int a = 0; a < 6; ++a) {
      const double ga = g[0] * gs[a][0] + g[1] * gs[a][1];
      out.r[a] += wb * mu * ga - qp.w * prm.g * fe.n(q, a);
      out.f[a] += qp.w * prm.g * fe.n(q, a);
      if (!jac) continue;
      for (int bb = 0; bb < 6; ++bb) {
        const double gb = g[0] * gs[bb][0] + g[1] * gs[bb][1];
        out.k[a * 6 + bb] += wb * (mu * (gs[a][0] * gs[bb][0] + gs[a][1] * gs[bb][1]) + dmu * ga * gb);
      }
    }
  }
}

}  // namespace

ScalarField axial_only_solve(const CrossSection& cs, const FlowParams& params, const SolverOptions& opts,
                             int* iterations) {
  params.validate();
  opts.validate();
  const FeSpace& fe = cs.fe();
  const int n = fe.n_p2(), nc = fe.n_cells();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);

  auto assemble = [&](const Eigen::VectorXd& v, bool jac, Eigen::VectorXd& r, double& fnorm,
                      Eigen::SparseMatrix<double>* k) {
    std::vector<AxialCell> cells(nc);
    parallel_for(nc, opts.threads, [&](int b, int e) {
      for (int c = b; c < e; ++c) axial_cell(cs, params, v, c, jac, cells[c]);
    });
    r = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    std::vector<Eigen::Triplet<double>> trip;
    for (int c = 0; c < nc; ++c) {
      const auto nodes = fe.p2_nodes(c);
      for (int a = 0; a < 6; ++a) {
        if (fe.node_on_boundary(nodes[a])) continue;
        r[nodes[a]] += cells[c].r[a];
        f[nodes[a]] += cells[c].f[a];
        if (!jac) continue;
        for (int bb = 0; bb < 6; ++bb)
          if (!fe.node_on_boundary(nodes[bb])) trip.emplace_back(nodes[a], nodes[bb], cells[c].k[a * 6 + bb]);
      }
    }
    fnorm = f.norm();
    if (jac) {
      for (int i = 0; i < n; ++i)
        if (fe.node_on_boundary(i)) trip.emplace_back(i, i, 1.0);
      k->resize(n, n);
      k->setFromTriplets(trip.begin(), trip.end());
    }
  };

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  int it = 0;
  for (; it <= opts.max_iter; ++it) {
    Eigen::VectorXd r;
    double fnorm = 0.0;
    Eigen::SparseMatrix<double> k;
    assemble(x, true, r, fnorm, &k);
    const double rn = r.norm();
    if (rn <= opts.rtol * fnorm + opts.atol) break;
    if (it == opts.max_iter) throw std::runtime_error("axial solve did not converge");
    ldlt.compute(k);
    if (ldlt.info() != Eigen::Success) throw std::runtime_error("axial factorisation failed");
    const Eigen::VectorXd dx = ldlt.solve(-r);
    double omega = 1.0;
    Eigen::VectorXd trial;
    for (;;) {
      trial = x + omega * dx;
      Eigen::VectorXd rt;
      double ft = 0.0;
      assemble(trial, false, rt, ft, nullptr);
      if (rt.norm() < (1.0 - 1e-4 * omega) * rn || omega <= 1.0 / 64.0) break;
      omega *= 0.5;
    }
    x = trial;
  }
  if (iterations) *iterations = it;
  return {x};
}

}  // namespace gnf
