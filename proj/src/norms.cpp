#include "aleidp/norms.hpp"

#include <cmath>

namespace aleidp {

ErrorNorms error_norms(const Mesh& mesh, const StateField& U, int component,
                       const std::function<double(const Vec2&, double)>& exact, double t,
                       const QuadratureRule& rule) {
  const ReferenceElement ref(mesh.kind);
  const int nl = ref.node_count();
  ErrorNorms norms;
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const MapPoint mp = geometric_map(mesh, c, rule.points[q]);
      double uh = 0.0;
      for (int a = 0; a < nl; ++a)
        uh += ref.shape_value(a, rule.points[q]) * U(mesh.cell_dof(c, a), component);
      const double diff = std::abs(uh - exact(mp.x, t));
      const double w = rule.weights[q] * mp.detJ;
      norms.l1 += w * diff;
      norms.l2 += w * diff * diff;
    }
  norms.l2 = std::sqrt(norms.l2);
  return norms;
}

}  // namespace aleidp
