#include "assembly.hpp"

#include <array>
#include <cmath>

#ifdef GNF_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#else
#include <Eigen/SparseLU>
#endif

#include "gnf/parallel.hpp"

namespace gnf::detail {

namespace {

constexpr int kV = 18;        // local velocity unknowns
constexpr int kL = kV + 3;    // plus local pressure unknowns

struct CellOutput {
  std::array<double, kL> r{};
  std::array<double, kL> f{};           // forcing part, for the stopping test
  std::array<double, kL * kL> k{};
  std::array<double, 3> mean{};         // integrals of the pressure basis
  double pressure_integral = 0.0;
};

void cell_kernel(const FeSpace& fe, const FlowForm& form, const Eigen::VectorXd& x, int cell,
                 Linearization lin, CellOutput& out) {
  const auto nodes = fe.p2_nodes(cell);
  const auto& pnodes = fe.p1_nodes(cell);
  const int voff = 3 * fe.n_p2();
  double uloc[kV], ploc[3];
  for (int a = 0; a < 6; ++a)
    for (int i = 0; i < 3; ++i) uloc[3 * a + i] = x[3 * nodes[a] + i];
  for (int q = 0; q < 3; ++q) ploc[q] = x[voff + pnodes[q]];

  const double dlt = form.curvature;
  const double p = form.model.p;
  const double g2 = form.model.gamma_dot * form.model.gamma_dot;
  const bool want_k = lin != Linearization::none;

  for (int q = 0; q < fe.n_qp_per_cell(); ++q) {
    const auto& qp = fe.qp(cell, q);
    const double b = 1.0 + dlt * qp.x2, kap = dlt / b, w = qp.w;
    double n[6], d1[6], d2[6];
    for (int a = 0; a < 6; ++a) {
      n[a] = fe.n(q, a);
      d1[a] = qp.dn[2 * a];
      d2[a] = qp.dn[2 * a + 1];
    }
    double u[3] = {0, 0, 0}, du[2][3] = {{0, 0, 0}, {0, 0, 0}};
    for (int a = 0; a < 6; ++a)
      for (int i = 0; i < 3; ++i) {
        const double c = uloc[3 * a + i];
        u[i] += n[a] * c;
        du[0][i] += d1[a] * c;
        du[1][i] += d2[a] * c;
      }
    double ph = 0.0, lq[3];
    for (int k = 0; k < 3; ++k) {
      lq[k] = fe.l(q, k);
      ph += lq[k] * ploc[k];
    }

    // Starred symmetric gradient of u and of each basis function.
    const SymTensor3 eta{du[0][0],
                         du[1][1],
                         kap * u[1],
                         0.5 * (du[0][1] + du[1][0]),
                         0.5 * du[0][2],
                         0.5 * (du[1][2] - kap * u[2])};
    SymTensor3 e[kV];
    double divb[kV];
    for (int a = 0; a < 6; ++a) {
      e[3 * a + 0] = {d1[a], 0.0, 0.0, 0.5 * d2[a], 0.0, 0.0};
      e[3 * a + 1] = {0.0, d2[a], kap * n[a], 0.5 * d1[a], 0.0, 0.0};
      e[3 * a + 2] = {0.0, 0.0, 0.0, 0.0, 0.5 * d1[a], 0.5 * (d2[a] - kap * n[a])};
      divb[3 * a + 0] = b * d1[a];
      divb[3 * a + 1] = b * (d2[a] + kap * n[a]);
      divb[3 * a + 2] = 0.0;
    }
    const double s = 1.0 + g2 * ddot(eta, eta);
    const double visc = (p == 2.0) ? 1.0 : std::pow(s, 0.5 * (p - 2.0));
    const double wb = w * b;
    SymTensor3 t = (2.0 * visc) * eta;

    const double divu = b * (du[0][0] + du[1][1] + kap * u[1]);
    const double fax = form.axial_force ? form.axial_force(qp.x1, qp.x2) : 0.0;
    const double sig = form.sigma ? form.sigma_scale * form.sigma->value(u[2]) : 0.0;

    double ugn[6];
    for (int a = 0; a < 6; ++a) ugn[a] = u[0] * d1[a] + u[1] * d2[a];
    double tr[3];
    for (int i = 0; i < 3; ++i) tr[i] = u[0] * du[0][i] + u[1] * du[1][i];

    for (int a = 0; a < 6; ++a)
      for (int i = 0; i < 3; ++i) {
        const int A = 3 * a + i;
        double r = wb * ddot(t, e[A]) - w * ph * divb[A];
        if (form.re != 0.0) {
          double c = 0.5 * b * (tr[i] * n[a] - ugn[a] * u[i]);
          if (i == 2) c += dlt * u[2] * u[1] * n[a];
          if (i == 1) c -= dlt * u[2] * u[2] * n[a];
          r += form.re * w * c;
        }
        if (i == 2) {
          r -= w * fax * n[a];
          out.f[A] += w * fax * n[a];
        }
        if (i == 1 && sig != 0.0) {
          r -= w * sig * n[a];
          out.f[A] += w * sig * n[a];
        }
        out.r[A] += r;
      }
    for (int k = 0; k < 3; ++k) {
      out.r[kV + k] -= w * lq[k] * divu;
      out.mean[k] += w * lq[k];
    }
    out.pressure_integral += w * ph;

    if (!want_k) continue;

    double ed[kV];
    double cjac = 0.0;
    if (lin == Linearization::newton && p != 2.0) {
      cjac = 2.0 * (p - 2.0) * g2 * visc / s;
      for (int A = 0; A < kV; ++A) ed[A] = ddot(eta, e[A]);
    }
    double sigd = 0.0;
    if (form.sigma && lin == Linearization::newton && form.sigma_in_jacobian) {
      const auto dv = form.sigma->derivative(u[2]);
      if (dv) sigd = form.sigma_scale * *dv;
    }
    for (int A = 0; A < kV; ++A) {
      const int a = A / 3, i = A % 3;
      for (int B = 0; B < kV; ++B) {
        const int bn = B / 3, k = B % 3;
        double v = 2.0 * visc * ddot(e[A], e[B]);
        if (cjac != 0.0) v += cjac * ed[A] * ed[B];
        v *= wb;
        if (form.re != 0.0) {
          double c = 0.0;
          if (k == i) c += 0.5 * b * (ugn[bn] * n[a] - ugn[a] * n[bn]);
          if (i == 2 && k == 1) c += dlt * u[2] * n[bn] * n[a];
          if (i == 1 && k == 2) c -= dlt * u[2] * n[bn] * n[a];
          if (lin == Linearization::newton) {
            if (k < 2) c += 0.5 * b * n[bn] * (du[k][i] * n[a] - (k == 0 ? d1[a] : d2[a]) * u[i]);
            if (i == 2 && k == 2) c += dlt * n[bn] * u[1] * n[a];
            if (i == 1 && k == 2) c -= dlt * u[2] * n[bn] * n[a];
          }
          v += form.re * w * c;
        }
        if (i == 1 && k == 2 && sigd != 0.0) v -= w * sigd * n[bn] * n[a];
        out.k[A * kL + B] += v;
      }
      for (int kk = 0; kk < 3; ++kk) {
        const double v = -w * lq[kk] * divb[A];
        out.k[A * kL + kV + kk] += v;
        out.k[(kV + kk) * kL + A] += v;
      }
    }
  }
}

}  // namespace

Assembled assemble(const FeSpace& fe, const FlowForm& form, const Eigen::VectorXd& x, Linearization lin,
                   int threads) {
  const int nc = fe.n_cells();
  const int nv = 3 * fe.n_p2();
  const int n = n_unknowns(fe);
  const int lam = n - 1;
  std::vector<CellOutput> cells(nc);
  parallel_for(nc, threads, [&](int b, int e) {
    for (int c = b; c < e; ++c) cell_kernel(fe, form, x, c, lin, cells[c]);
  });

  Assembled out;
  out.residual = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd forcing = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Triplet<double>> trip;
  if (lin != Linearization::none) trip.reserve(static_cast<std::size_t>(nc) * (kL * kL + 6));

  auto is_fixed = [&](int dof) { return dof < nv && fe.node_on_boundary(dof / 3); };
  double pressure_integral = 0.0;
  for (int c = 0; c < nc; ++c) {
    const auto nodes = fe.p2_nodes(c);
    const auto& pn = fe.p1_nodes(c);
    int dofs[kL];
    for (int a = 0; a < 6; ++a)
      for (int i = 0; i < 3; ++i) dofs[3 * a + i] = 3 * nodes[a] + i;
    for (int k = 0; k < 3; ++k) dofs[kV + k] = nv + pn[k];
    const CellOutput& co = cells[c];
    for (int A = 0; A < kL; ++A) {
      if (is_fixed(dofs[A])) continue;
      out.residual[dofs[A]] += co.r[A];
      forcing[dofs[A]] += co.f[A];
    }
    for (int k = 0; k < 3; ++k) out.residual[dofs[kV + k]] += co.mean[k] * x[lam];
    pressure_integral += co.pressure_integral;
    if (lin == Linearization::none) continue;
    for (int A = 0; A < kL; ++A) {
      if (is_fixed(dofs[A])) continue;
      for (int B = 0; B < kL; ++B) {
        if (is_fixed(dofs[B])) continue;
        const double v = co.k[A * kL + B];
        if (v != 0.0) trip.emplace_back(dofs[A], dofs[B], v);
      }
    }
    for (int k = 0; k < 3; ++k) {
      trip.emplace_back(dofs[kV + k], lam, co.mean[k]);
      trip.emplace_back(lam, dofs[kV + k], co.mean[k]);
    }
  }
  out.residual[lam] = pressure_integral;
  out.forcing_norm = forcing.norm();
  if (lin != Linearization::none) {
    for (int d = 0; d < nv; ++d)
      if (is_fixed(d)) trip.emplace_back(d, d, 1.0);
    out.jacobian.resize(n, n);
    out.jacobian.setFromTriplets(trip.begin(), trip.end());
  }
  return out;
}

struct SparseSolver::Impl {
#ifdef GNF_HAVE_UMFPACK
  Eigen::UmfPackLU<Eigen::SparseMatrix<double>> lu;
#else
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
#endif
};

SparseSolver::SparseSolver() : impl_(std::make_unique<Impl>()) {}
SparseSolver::~SparseSolver() = default;

bool SparseSolver::solve(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXd& b, Eigen::VectorXd& x) {
  impl_->lu.compute(a);
  if (impl_->lu.info() != Eigen::Success) return false;
  x = impl_->lu.solve(b);
  return impl_->lu.info() == Eigen::Success && x.allFinite();
}

}  // namespace gnf::detail
