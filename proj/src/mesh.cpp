#include "gnf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gnf {

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::disk: return "disk";
    case ShapeKind::rectangle: return "rectangle";
    case ShapeKind::external: return "file";
  }
  return "unknown";
}

ShapeKind shape_kind_from_string(const std::string& s) {
  if (s == "disk") return ShapeKind::disk;
  if (s == "rectangle") return ShapeKind::rectangle;
  if (s == "file" || s == "external") return ShapeKind::external;
  throw std::invalid_argument("unknown shape '" + s + "'");
}

std::vector<int> Mesh::boundary_vertex_list() const {
  std::vector<int> out;
  for (int v = 0; v < n_vertices(); ++v)
    if (vertex_on_boundary[v]) out.push_back(v);
  return out;
}

namespace {

double signed_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

double cell_aspect(const Point2& a, const Point2& b, const Point2& c) {
  auto len2 = [](const Point2& p, const Point2& q) {
    return (p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]);
  };
  const double lmax = std::max({len2(a, b), len2(b, c), len2(c, a)});
  const double area = std::abs(signed_area(a, b, c));
  if (area == 0.0) return std::numeric_limits<double>::infinity();
  return lmax * std::sqrt(3.0) / (4.0 * area);
}

}  // namespace

double max_aspect_ratio(const Mesh& mesh) {
  double worst = 0.0;
  for (const auto& c : mesh.cells)
    worst = std::max(worst, cell_aspect(mesh.vertices[c[0]], mesh.vertices[c[1]], mesh.vertices[c[2]]));
  return worst;
}

void finalize_topology(Mesh& mesh) {
  const int nv = mesh.n_vertices();
  if (nv < 3 || mesh.cells.empty()) throw std::invalid_argument("mesh has no cells");
  for (auto& c : mesh.cells) {
    for (int v : c)
      if (v < 0 || v >= nv) throw std::invalid_argument("cell references a missing vertex");
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2])
      throw std::invalid_argument("degenerate cell with repeated vertex");
    const double a = signed_area(mesh.vertices[c[0]], mesh.vertices[c[1]], mesh.vertices[c[2]]);
    if (a == 0.0) throw std::invalid_argument("degenerate cell with zero area");
    if (a < 0.0) std::swap(c[1], c[2]);
  }
  if (max_aspect_ratio(mesh) > 1e3) throw std::invalid_argument("cell aspect ratio exceeds 1e3");

  std::map<std::pair<int, int>, int> lookup;
  std::vector<int> use_count;
  mesh.edges.clear();
  mesh.cell_edges.assign(mesh.cells.size(), {0, 0, 0});
  for (std::size_t ci = 0; ci < mesh.cells.size(); ++ci) {
    const auto& c = mesh.cells[ci];
    for (int k = 0; k < 3; ++k) {
      const int a = c[k], b = c[(k + 1) % 3];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = lookup.try_emplace({key.first, key.second}, mesh.n_edges());
      if (inserted) {
        mesh.edges.push_back({key.first, key.second});
        use_count.push_back(0);
      }
      ++use_count[it->second];
      mesh.cell_edges[ci][k] = it->second;
    }
  }
  mesh.vertex_on_boundary.assign(nv, 0);
  mesh.edge_on_boundary.assign(mesh.edges.size(), 0);
  mesh.edge_nodes.resize(mesh.edges.size());
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (use_count[e] > 2) throw std::invalid_argument("non-manifold edge in mesh");
    const auto [a, b] = mesh.edges[e];
    if (use_count[e] == 1) {
      mesh.edge_on_boundary[e] = 1;
      mesh.vertex_on_boundary[a] = mesh.vertex_on_boundary[b] = 1;
    }
    mesh.edge_nodes[e] = {0.5 * (mesh.vertices[a][0] + mesh.vertices[b][0]),
                          0.5 * (mesh.vertices[a][1] + mesh.vertices[b][1])};
  }
  mesh.x2_min = mesh.x2_max = mesh.vertices[0][1];
  for (const auto& v : mesh.vertices) {
    mesh.x2_min = std::min(mesh.x2_min, v[1]);
    mesh.x2_max = std::max(mesh.x2_max, v[1]);
  }
  mesh.curved_boundary = false;
}

Mesh build_disk_mesh(int rings) {
  if (rings < 1) throw std::invalid_argument("disk mesh needs at least one ring");
  Mesh mesh;
  mesh.vertices.push_back({0.0, 0.0});
  auto ring_start = [](int k) { return k == 0 ? 0 : 1 + 3 * k * (k - 1); };
  auto ring_size = [](int k) { return k == 0 ? 1 : 6 * k; };
  for (int k = 1; k <= rings; ++k) {
    const double r = static_cast<double>(k) / rings;
    const int n = ring_size(k);
    for (int j = 0; j < n; ++j) {
      const double th = -0.5 * std::numbers::pi + 2.0 * std::numbers::pi * j / n;
      mesh.vertices.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  for (int k = 1; k <= rings; ++k) {
    const int n0 = ring_size(k - 1), n1 = ring_size(k);
    const int s0 = ring_start(k - 1), s1 = ring_start(k);
    if (k == 1) {
      for (int j = 0; j < n1; ++j) mesh.cells.push_back({0, s1 + j, s1 + (j + 1) % n1});
      continue;
    }
    // Merge the two rings by angle; fractions i / n0 and o / n1 are compared
    // exactly in integers.
    int i = 0, o = 0;
    while (i < n0 || o < n1) {
      const bool advance_inner = (o == n1) || (i < n0 && (i + 1) * n1 < (o + 1) * n0);
      if (advance_inner) {
        mesh.cells.push_back({s0 + i % n0, s0 + (i + 1) % n0, s1 + o % n1});
        ++i;
      } else {
        mesh.cells.push_back({s0 + i % n0, s1 + (o + 1) % n1, s1 + o % n1});
        ++o;
      }
    }
  }
  finalize_topology(mesh);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    if (!mesh.edge_on_boundary[e]) continue;
    auto& q = mesh.edge_nodes[e];
    const double r = std::hypot(q[0], q[1]);
    q = {q[0] / r, q[1] / r};
  }
  mesh.curved_boundary = true;
  mesh.x2_min = -1.0;
  mesh.x2_max = 1.0;
  return mesh;
}

Mesh build_rectangle_mesh(double a, double b, int nx, int ny) {
  if (!(a > 0.0) || !(b > 0.0) || nx < 1 || ny < 1)
    throw std::invalid_argument("invalid rectangle mesh parameters");
  Mesh mesh;
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      mesh.vertices.push_back({-0.5 * a + a * i / nx, -0.5 * b + b * j / ny});
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      mesh.cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  finalize_topology(mesh);
  return mesh;
}

Mesh build_mesh(const ShapeSpec& shape, double h) {
  if (shape.kind != ShapeKind::external && !(h > 0.0))
    throw std::invalid_argument("mesh size must be positive");
  switch (shape.kind) {
    case ShapeKind::disk:
      return build_disk_mesh(std::max(1, static_cast<int>(std::ceil(1.0 / h - 1e-9))));
    case ShapeKind::rectangle:
      return build_rectangle_mesh(shape.a, shape.b,
                                  std::max(1, static_cast<int>(std::ceil(shape.a / h - 1e-9))),
                                  std::max(1, static_cast<int>(std::ceil(shape.b / h - 1e-9))));
    case ShapeKind::external:
      return read_mesh(shape.file);
  }
  throw std::invalid_argument("unknown shape");
}

namespace {

void expect_header(std::istream& in, const std::string& word, std::size_t& count) {
  std::string w;
  if (!(in >> w >> count) || w != word)
    throw std::runtime_error("mesh file: expected section '" + word + "'");
}

}  // namespace

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file " + path);
  Mesh mesh;
  std::size_t n = 0;
  expect_header(in, "vertices", n);
  mesh.vertices.resize(n);
  for (auto& v : mesh.vertices)
    if (!(in >> v[0] >> v[1])) throw std::runtime_error("mesh file: truncated vertex list");
  expect_header(in, "cells", n);
  mesh.cells.resize(n);
  for (auto& c : mesh.cells)
    if (!(in >> c[0] >> c[1] >> c[2])) throw std::runtime_error("mesh file: truncated cell list");
  expect_header(in, "boundary", n);
  std::vector<int> listed(n);
  for (auto& b : listed)
    if (!(in >> b)) throw std::runtime_error("mesh file: truncated boundary list");
  finalize_topology(mesh);
  std::sort(listed.begin(), listed.end());
  if (listed != mesh.boundary_vertex_list())
    throw std::runtime_error("mesh file: boundary list does not match the topology");
  return mesh;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file " + path);
  out.precision(17);
  out << "vertices " << mesh.vertices.size() << '\n';
  for (const auto& v : mesh.vertices) out << v[0] << ' ' << v[1] << '\n';
  out << "cells " << mesh.cells.size() << '\n';
  for (const auto& c : mesh.cells) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  const auto bnd = mesh.boundary_vertex_list();
  out << "boundary " << bnd.size() << '\n';
  for (int b : bnd) out << b << '\n';
}

}  // namespace gnf
