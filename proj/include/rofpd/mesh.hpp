#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rofpd/local_ops.hpp"

namespace rofpd {

// Structured triangulation of the unit square: n x n grid squares, each cut
// along the "/" diagonal (bottom-left to top-right) into a lower and an
// upper triangle, both counter-clockwise. Nodes are ordered lexicographically
// by (row, column); triangles by parent square, lower then upper. Immutable
// once built; safe to share read-only across threads.
struct TriMesh {
  int n = 0;                                        // subdivisions per side
  double h = 0.0;                                   // mesh size, 1/n
  std::vector<Vec2> nodes;                          // (n+1)^2 coordinates
  std::vector<std::array<int, 3>> triangles;        // 2n^2 node triples, CCW
  std::vector<double> areas;                        // per-triangle area
  std::vector<std::array<Vec2, 3>> grad_basis;      // per-triangle P1 gradients
  std::vector<int> boundary_nodes;                  // indices on the boundary

  int node_count() const { return static_cast<int>(nodes.size()); }
  int tri_count() const { return static_cast<int>(triangles.size()); }
};

// Builds the uniform mesh for a given number of subdivisions per side.
// Throws std::invalid_argument for n < 1.
TriMesh build_uniform_mesh(int n);

// Area and the three P1 basis gradients of triangle t.
struct ElementGeometry {
  double area;
  std::array<Vec2, 3> grad;
};
ElementGeometry element_geometry(const TriMesh& mesh, int t);

// Paper-scale mesh levels: level 1..4 correspond to n = 16, 32, 64, 128.
int level_to_subdivisions(int level);

}  // namespace rofpd
