#pragma once

#include <array>
#include <string>
#include <vector>

namespace gnf {

using Point2 = std::array<double, 2>;

enum class ShapeKind { disk, rectangle, external };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::disk;
  double a = 1.0;  // rectangle side along x1
  double b = 1.0;  // rectangle side along x2
  std::string file;

  static ShapeSpec unit_disk() { return {}; }
  static ShapeSpec rectangle(double a, double b) { return {ShapeKind::rectangle, a, b, {}}; }
  static ShapeSpec external(std::string path) { return {ShapeKind::external, 1.0, 1.0, std::move(path)}; }
};

std::string to_string(ShapeKind k);
ShapeKind shape_kind_from_string(const std::string& s);

// Triangulation with the edge topology needed by quadratic elements.
// Local edge k of a cell joins local vertices k and (k+1) % 3.
struct Mesh {
  std::vector<Point2> vertices;
  std::vector<std::array<int, 3>> cells;  // counterclockwise
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> cell_edges;
  std::vector<char> vertex_on_boundary;
  std::vector<char> edge_on_boundary;
  // Geometric node of each edge. Boundary edges of the disk get their node on
  // the circle so that cells along the boundary are curved.
  std::vector<Point2> edge_nodes;
  double x2_min = 0.0;  // extremal ordinates of the exact shape
  double x2_max = 0.0;
  bool curved_boundary = false;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> boundary_vertex_list() const;
};

// Fills edges, boundary flags, straight edge nodes and x2 extrema from
// vertices and cells. Orients cells counterclockwise. Throws on degenerate
// or badly shaped cells.
void finalize_topology(Mesh& mesh);

// Unit disk from concentric rings of radius k / rings with 6k points each.
Mesh build_disk_mesh(int rings);

// [-a/2, a/2] x [-b/2, b/2] split into nx * ny squares, two triangles each.
Mesh build_rectangle_mesh(double a, double b, int nx, int ny);

// Mesh for the shape at nominal size h.
Mesh build_mesh(const ShapeSpec& shape, double h);

// Plain text: "vertices N" then N lines "x1 x2", "cells M" then M lines of
// three 0-based indices, "boundary K" then K boundary vertex indices.
Mesh read_mesh(const std::string& path);
void write_mesh(const Mesh& mesh, const std::string& path);

double max_aspect_ratio(const Mesh& mesh);

}  // namespace gnf
