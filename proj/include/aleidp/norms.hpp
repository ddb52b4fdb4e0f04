#pragma once

#include <functional>

#include "aleidp/mesh.hpp"

namespace aleidp {

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
};

// Cell-quadrature norms of u_h(component) - exact on the current mesh.
ErrorNorms error_norms(const Mesh& mesh, const StateField& U, int component,
                       const std::function<double(const Vec2&, double)>& exact, double t,
                       const QuadratureRule& rule);

}  // namespace aleidp
