#pragma once

#include <array>
#include <memory>
#include <vector>

#include "gnf/mesh.hpp"

namespace gnf {

// Quadratic (P2) and linear (P1) Lagrange spaces on an isoparametric
// triangulation, with geometry cached at every quadrature point.
//
// P2 nodes are the mesh vertices followed by the edge nodes. P1 nodes are
// the vertices. Local P2 ordering: vertices 0, 1, 2 then edges (0,1),
// (1,2), (2,0).
class FeSpace {
 public:
  static constexpr int kNodesP2 = 6;
  static constexpr int kNodesP1 = 3;

  struct QPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    double w = 0.0;                      // physical weight
    std::array<double, 12> dn{};         // d/dx_j of P2 basis a at [2a + j]
    std::array<double, 6> dl{};          // d/dx_j of P1 basis a at [2a + j]
  };

  explicit FeSpace(std::shared_ptr<const Mesh> mesh);

  const Mesh& mesh() const { return *mesh_; }
  std::shared_ptr<const Mesh> mesh_ptr() const { return mesh_; }

  int n_cells() const { return mesh_->n_cells(); }
  int n_qp_per_cell() const { return nq_; }
  int n_qp() const { return n_cells() * nq_; }
  int n_p2() const { return mesh_->n_vertices() + mesh_->n_edges(); }
  int n_p1() const { return mesh_->n_vertices(); }

  std::array<int, 6> p2_nodes(int cell) const;
  const std::array<int, 3>& p1_nodes(int cell) const { return mesh_->cells[cell]; }

  const QPoint& qp(int cell, int q) const { return qps_[static_cast<std::size_t>(cell) * nq_ + q]; }
  const QPoint& qp(int global) const { return qps_[global]; }

  // Reference basis values at quadrature point q.
  double n(int q, int a) const { return nval_[q * 6 + a]; }
  double l(int q, int a) const { return lval_[q * 3 + a]; }

  const Point2& node(int p2_node) const { return nodes_[p2_node]; }
  bool node_on_boundary(int p2_node) const { return boundary_[p2_node] != 0; }

  double area() const { return area_; }

  // Evaluate the P2 basis at a reference point.
  static void p2_basis(double xi, double eta, double* n, double* dn_ref);

 private:
  std::shared_ptr<const Mesh> mesh_;
  int nq_ = 0;
  std::vector<QPoint> qps_;
  std::vector<double> nval_, lval_;
  std::vector<Point2> nodes_;
  std::vector<char> boundary_;
  double area_ = 0.0;
};

}  // namespace gnf
