#pragma once

#include <array>
#include <string>
#include <vector>

#include "aleidp/core.hpp"
#include "aleidp/element.hpp"

namespace aleidp {

// Moving mesh. Connectivity is fixed for the whole run; only dof coordinates
// are re-stamped per time level. Periodic directions are handled by mapping
// several geometric nodes onto one dof: a node's coordinate is the dof
// coordinate plus a constant shift, so moving a dof moves every copy.
struct Mesh {
  int dim = 2;
  CellKind kind = CellKind::Quad;
  double time = 0.0;

  VelocityField pos;                      // n_dofs x 2 dof coordinates
  std::vector<int> node_dof;              // geometric node -> dof
  std::vector<Vec2> node_shift;           // geometric node -> coordinate offset
  std::vector<std::array<int, 4>> cells;  // node indices, first n_local used
  std::vector<int> dof_tag;               // boundary bitmask per dof

  int n_dofs() const { return static_cast<int>(pos.rows()); }
  int n_nodes() const { return static_cast<int>(node_dof.size()); }
  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_local() const { return kind == CellKind::Quad ? 4 : (kind == CellKind::Triangle ? 3 : 2); }
  bool is_periodic() const { return n_nodes() != n_dofs(); }

  Vec2 node_pos(int k) const { return pos.row(node_dof[k]).transpose() + node_shift[k]; }
  int cell_dof(int c, int a) const { return node_dof[cells[c][a]]; }

  // Advance every dof by dt * W and stamp the new time.
  void move(const VelocityField& W, double dt);
  Mesh moved(const VelocityField& W, double dt) const;

  double volume(const QuadratureRule& rule) const;
};

struct MapPoint {
  Vec2 x;
  Eigen::Matrix2d J;  // for 1D cells the second column is e2 so det works
  double detJ;
};

// Evaluate the geometric map of a cell at a reference point.
MapPoint geometric_map(const Mesh& mesh, int cell, const Vec2& xhat);

// True if det J > 0 at every quadrature point of every cell.
bool mesh_valid(const Mesh& mesh, const QuadratureRule& rule);

// Structured generators. Boundary dofs are tagged with the boundary bitmask;
// periodic directions drop their side tags.
Mesh make_segment_mesh(double x0, double x1, int n_cells, bool periodic = false);
Mesh make_tensor_mesh(CellKind kind, const std::vector<double>& xs,
                      const std::vector<double>& ys, bool periodic_x = false,
                      bool periodic_y = false);
Mesh make_box_mesh(CellKind kind, const Vec2& lo, const Vec2& hi, int nx, int ny,
                   bool periodic_x = false, bool periodic_y = false);

// Plain-text mesh file: header "dim nnodes ncells kind", node coordinate
// lines, then 1-based connectivity lines. Boundary dofs get the generic tag.
Mesh load_mesh(const std::string& path);

// Sparse dof adjacency (shape-function supports), CSR with diagonal included.
// Also caches, per cell, the CSR slot of each local pair (cell_slot), which
// makes assembly a direct indexed accumulation.
struct DofGraph {
  int n_dofs = 0;
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<int> trans;                 // index of the transposed entry
  std::vector<int> diag;                  // index of (i,i)
  std::vector<std::array<int, 16>> cell_slot;  // (a * n_local + b) -> CSR index
  std::vector<std::array<int, 4>> cell_dofs;

  int n_entries() const { return static_cast<int>(col.size()); }
  int find(int i, int j) const;  // -1 if not adjacent
  int degree(int i) const { return row_ptr[i + 1] - row_ptr[i]; }
};

DofGraph build_dof_graph(const Mesh& mesh);

}  // namespace aleidp
