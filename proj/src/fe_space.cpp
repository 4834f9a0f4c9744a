#include "gnf/fe_space.hpp"

#include <cmath>
#include <stdexcept>

#include "gnf/quadrature.hpp"

namespace gnf {

void FeSpace::p2_basis(double xi, double eta, double* n, double* dn) {
  const double l0 = 1.0 - xi - eta, l1 = xi, l2 = eta;
  n[0] = l0 * (2.0 * l0 - 1.0);
  n[1] = l1 * (2.0 * l1 - 1.0);
  n[2] = l2 * (2.0 * l2 - 1.0);
  n[3] = 4.0 * l0 * l1;
  n[4] = 4.0 * l1 * l2;
  n[5] = 4.0 * l2 * l0;
  if (!dn) return;
  const double d[6][2] = {{1.0 - 4.0 * l0, 1.0 - 4.0 * l0},
                          {4.0 * l1 - 1.0, 0.0},
                          {0.0, 4.0 * l2 - 1.0},
                          {4.0 * (l0 - l1), -4.0 * l1},
                          {4.0 * l2, 4.0 * l1},
                          {-4.0 * l2, 4.0 * (l0 - l2)}};
  for (int a = 0; a < 6; ++a) {
    dn[2 * a] = d[a][0];
    dn[2 * a + 1] = d[a][1];
  }
}

FeSpace::FeSpace(std::shared_ptr<const Mesh> mesh) : mesh_(std::move(mesh)) {
  const auto& rule = triangle_rule();
  nq_ = static_cast<int>(rule.size());
  nval_.resize(nq_ * 6);
  lval_.resize(nq_ * 3);
  std::vector<double> dref(nq_ * 12);
  for (int q = 0; q < nq_; ++q) {
    p2_basis(rule[q].xi, rule[q].eta, &nval_[q * 6], &dref[q * 12]);
    lval_[q * 3 + 0] = 1.0 - rule[q].xi - rule[q].eta;
    lval_[q * 3 + 1] = rule[q].xi;
    lval_[q * 3 + 2] = rule[q].eta;
  }
  const double dlref[3][2] = {{-1.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}};

  const Mesh& m = *mesh_;
  const int nv = m.n_vertices();
  nodes_.resize(n_p2());
  boundary_.assign(n_p2(), 0);
  for (int v = 0; v < nv; ++v) {
    nodes_[v] = m.vertices[v];
    boundary_[v] = m.vertex_on_boundary[v];
  }
  for (int e = 0; e < m.n_edges(); ++e) {
    nodes_[nv + e] = m.edge_nodes[e];
    boundary_[nv + e] = m.edge_on_boundary[e];
  }

  qps_.resize(static_cast<std::size_t>(n_cells()) * nq_);
  area_ = 0.0;
  for (int c = 0; c < n_cells(); ++c) {
    const auto nodes = p2_nodes(c);
    for (int q = 0; q < nq_; ++q) {
      const double* dr = &dref[q * 12];
      double j00 = 0, j01 = 0, j10 = 0, j11 = 0, x1 = 0, x2 = 0;
      for (int a = 0; a < 6; ++a) {
        const Point2& X = nodes_[nodes[a]];
        x1 += X[0] * nval_[q * 6 + a];
        x2 += X[1] * nval_[q * 6 + a];
        j00 += X[0] * dr[2 * a];
        j01 += X[0] * dr[2 * a + 1];
        j10 += X[1] * dr[2 * a];
        j11 += X[1] * dr[2 * a + 1];
      }
      const double det = j00 * j11 - j01 * j10;
      if (!(det > 0.0)) throw std::runtime_error("inverted or degenerate isoparametric cell");
      QPoint& p = qps_[static_cast<std::size_t>(c) * nq_ + q];
      p.x1 = x1;
      p.x2 = x2;
      p.w = rule[q].w * det;
      for (int a = 0; a < 6; ++a) {
        p.dn[2 * a] = (j11 * dr[2 * a] - j10 * dr[2 * a + 1]) / det;
        p.dn[2 * a + 1] = (-j01 * dr[2 * a] + j00 * dr[2 * a + 1]) / det;
      }
      for (int a = 0; a < 3; ++a) {
        p.dl[2 * a] = (j11 * dlref[a][0] - j10 * dlref[a][1]) / det;
        p.dl[2 * a + 1] = (-j01 * dlref[a][0] + j00 * dlref[a][1]) / det;
      }
      area_ += p.w;
    }
  }
}

std::array<int, 6> FeSpace::p2_nodes(int cell) const {
  const auto& c = mesh_->cells[cell];
  const auto& e = mesh_->cell_edges[cell];
  const int nv = mesh_->n_vertices();
  return {c[0], c[1], c[2], nv + e[0], nv + e[1], nv + e[2]};
}

}  // namespace gnf
