#pragma once

#include <vector>

#include "aleidp/core.hpp"

namespace aleidp {

enum class CellKind { Segment, Triangle, Quad };

const char* cell_kind_name(CellKind kind);
CellKind cell_kind_from_name(const std::string& name);

// Lagrange reference element: nonnegative shape functions forming a partition
// of unity, with shape_value(i, node(j)) = delta_ij.
class ReferenceElement {
 public:
  explicit ReferenceElement(CellKind kind);

  CellKind kind() const { return kind_; }
  int dim() const { return kind_ == CellKind::Segment ? 1 : 2; }
  int node_count() const { return n_nodes_; }
  double reference_volume() const { return volume_; }

  double shape_value(int i, const Vec2& xhat) const;
  Vec2 shape_gradient(int i, const Vec2& xhat) const;
  Vec2 local_node(int i) const;

 private:
  CellKind kind_;
  int n_nodes_;
  double volume_;
};

// Cell quadrature on the reference element; weights sum to the reference
// volume.
struct QuadratureRule {
  std::vector<Vec2> points;
  std::vector<double> weights;

  // Default assembly rules: 2-point Gauss on segments, 3 edge-midpoints on
  // triangles, 2x2 Gauss on quads. Exact for all stencil integrands on valid
  // bilinear cells.
  static QuadratureRule assembly(CellKind kind);
  // Higher-order rule used for error norms.
  static QuadratureRule norms(CellKind kind);
};

// Quadrature on [0,1] for the time-averaged stencil; must be exact for
// polynomials of degree <= d-1.
struct TimeQuadrature {
  std::vector<double> nodes;    // zeta_l
  std::vector<double> weights;  // omega_l

  static TimeQuadrature midpoint();     // exact through degree 1
  static TimeQuadrature gauss2();       // exact through degree 3
};

}  // namespace aleidp
