#include "aleidp/element.hpp"

#include <cmath>

namespace aleidp {

const char* cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Segment:
      return "segment";
    case CellKind::Triangle:
      return "triangle";
    case CellKind::Quad:
      return "quad";
  }
  return "?";
}

CellKind cell_kind_from_name(const std::string& name) {
  if (name == "segment" || name == "p1-segment") return CellKind::Segment;
  if (name == "triangle" || name == "p1-triangle" || name == "p1") return CellKind::Triangle;
  if (name == "quad" || name == "q1-quad" || name == "q1") return CellKind::Quad;
  throw MeshError("unsupported element kind: " + name);
}

ReferenceElement::ReferenceElement(CellKind kind) : kind_(kind) {
  switch (kind) {
    case CellKind::Segment:
      n_nodes_ = 2;
      volume_ = 1.0;
      break;
    case CellKind::Triangle:
      n_nodes_ = 3;
      volume_ = 0.5;
      break;
    case CellKind::Quad:
      n_nodes_ = 4;
      volume_ = 1.0;
      break;
    default:
      throw MeshError("unsupported element kind");
  }
}

double ReferenceElement::shape_value(int i, const Vec2& xhat) const {
  const double x = xhat[0];
  const double y = xhat[1];
  switch (kind_) {
    case CellKind::Segment:
      return i == 0 ? 1.0 - x : x;
    case CellKind::Triangle:
      switch (i) {
        case 0: return 1.0 - x - y;
        case 1: return x;
        default: return y;
      }
    case CellKind::Quad: {
      // Shared one-minus factors keep the partition-of-unity sum exactly zero
      // in floating point.
      const double mx = 1.0 - x;
      const double my = 1.0 - y;
      switch (i) {
        case 0: return mx * my;
        case 1: return x * my;
        case 2: return x * y;
        default: return mx * y;
      }
    }
  }
  return 0.0;
}

Vec2 ReferenceElement::shape_gradient(int i, const Vec2& xhat) const {
  const double x = xhat[0];
  const double y = xhat[1];
  switch (kind_) {
    case CellKind::Segment:
      return i == 0 ? Vec2(-1.0, 0.0) : Vec2(1.0, 0.0);
    case CellKind::Triangle:
      switch (i) {
        case 0: return Vec2(-1.0, -1.0);
        case 1: return Vec2(1.0, 0.0);
        default: return Vec2(0.0, 1.0);
      }
    case CellKind::Quad: {
      const double mx = 1.0 - x;
      const double my = 1.0 - y;
      switch (i) {
        case 0: return Vec2(-my, -mx);
        case 1: return Vec2(my, -x);
        case 2: return Vec2(y, x);
        default: return Vec2(-y, mx);
      }
    }
  }
  return Vec2::Zero();
}

Vec2 ReferenceElement::local_node(int i) const {
  switch (kind_) {
    case CellKind::Segment:
      return Vec2(i == 0 ? 0.0 : 1.0, 0.0);
    case CellKind::Triangle:
      switch (i) {
        case 0: return Vec2(0.0, 0.0);
        case 1: return Vec2(1.0, 0.0);
        default: return Vec2(0.0, 1.0);
      }
    case CellKind::Quad:
      switch (i) {
        case 0: return Vec2(0.0, 0.0);
        case 1: return Vec2(1.0, 0.0);
        case 2: return Vec2(1.0, 1.0);
        default: return Vec2(0.0, 1.0);
      }
  }
  return Vec2::Zero();
}

namespace {

QuadratureRule gauss_segment(int n) {
  QuadratureRule r;
  if (n == 2) {
    const double a = 0.5 - 0.5 / std::sqrt(3.0);
    const double b = 0.5 + 0.5 / std::sqrt(3.0);
    r.points = {Vec2(a, 0.0), Vec2(b, 0.0)};
    r.weights = {0.5, 0.5};
  } else {
    const double s = 0.5 * std::sqrt(3.0 / 5.0);
    r.points = {Vec2(0.5 - s, 0.0), Vec2(0.5, 0.0), Vec2(0.5 + s, 0.0)};
    r.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  }
  return r;
}

QuadratureRule gauss_quad(int n) {
  const QuadratureRule g = gauss_segment(n);
  QuadratureRule r;
  for (std::size_t i = 0; i < g.points.size(); ++i)
    for (std::size_t j = 0; j < g.points.size(); ++j) {
      r.points.emplace_back(g.points[i][0], g.points[j][0]);
      r.weights.push_back(g.weights[i] * g.weights[j]);
    }
  return r;
}

QuadratureRule triangle_midpoints() {
  QuadratureRule r;  // degree-2 exact
  r.points = {Vec2(0.5, 0.0), Vec2(0.5, 0.5), Vec2(0.0, 0.5)};
  r.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
  return r;
}

QuadratureRule triangle_degree5() {
  QuadratureRule r;
  const double w0 = 9.0 / 80.0;
  const double a1 = (6.0 + std::sqrt(15.0)) / 21.0;
  const double w1 = (155.0 + std::sqrt(15.0)) / 2400.0;
  const double a2 = (6.0 - std::sqrt(15.0)) / 21.0;
  const double w2 = (155.0 - std::sqrt(15.0)) / 2400.0;
  r.points = {Vec2(1.0 / 3.0, 1.0 / 3.0),
              Vec2(a1, a1), Vec2(1.0 - 2.0 * a1, a1), Vec2(a1, 1.0 - 2.0 * a1),
              Vec2(a2, a2), Vec2(1.0 - 2.0 * a2, a2), Vec2(a2, 1.0 - 2.0 * a2)};
  r.weights = {w0, w1, w1, w1, w2, w2, w2};
  return r;
}

}  // namespace

QuadratureRule QuadratureRule::assembly(CellKind kind) {
  switch (kind) {
    case CellKind::Segment:
      return gauss_segment(2);
    case CellKind::Triangle:
      return triangle_midpoints();
    case CellKind::Quad:
      return gauss_quad(2);
  }
  throw MeshError("unsupported element kind");
}

QuadratureRule QuadratureRule::norms(CellKind kind) {
  switch (kind) {
    case CellKind::Segment:
      return gauss_segment(3);
    case CellKind::Triangle:
      return triangle_degree5();
    case CellKind::Quad:
      return gauss_quad(3);
  }
  throw MeshError("unsupported element kind");
}

TimeQuadrature TimeQuadrature::midpoint() { return {{0.5}, {1.0}}; }

TimeQuadrature TimeQuadrature::gauss2() {
  const double a = 0.5 - 0.5 / std::sqrt(3.0);
  const double b = 0.5 + 0.5 / std::sqrt(3.0);
  return {{a, b}, {0.5, 0.5}};
}

}  // namespace aleidp
