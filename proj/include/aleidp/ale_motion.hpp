#pragma once

#include <functional>
#include <map>
#include <vector>

#include "aleidp/mesh.hpp"
#include "aleidp/system.hpp"

namespace aleidp {

enum class AleMode { None, Analytic, Lagrangian, SmoothedLagrangian };

enum class BoundaryMotion { Fixed, Slide, Free, Prescribed };

// Per-step ALE node velocity construction. The smoothed-Lagrangian mode moves
// nodes to omega * a_lag + (1-omega) * a_smooth, where a_smooth is L Jacobi
// sweeps of neighbor averaging over the dof graph. Boundary dofs are held at
// their policy-determined positions and excluded from the sweeps.
struct AleStrategy {
  AleMode mode = AleMode::None;
  std::function<Vec2(const Vec2& x, double t)> analytic_velocity;
  double omega = 0.9;
  int sweeps = 2;

  struct BoundaryRule {
    BoundaryMotion motion = BoundaryMotion::Fixed;
    std::function<Vec2(const Vec2& x, double t)> velocity;  // Prescribed only
  };
  // Keyed by a single boundary bit; a dof uses the rule of its lowest set bit.
  std::map<int, BoundaryRule> boundary;

  BoundaryRule rule_for(int tag) const;

  static AleStrategy none() { return {}; }
  static AleStrategy analytic(std::function<Vec2(const Vec2&, double)> beta);
  static AleStrategy lagrangian();
  static AleStrategy smoothed_lagrangian(double omega = 0.9, int sweeps = 2);
};

VelocityField node_velocities(const AleStrategy& strategy, const Mesh& mesh,
                              const DofGraph& graph, const StateField& U,
                              const SystemDescriptor& system, double t, double dt);

struct InvertibilityReport {
  bool ok = true;
  std::vector<int> bad_cells;
  double worst_zeta = 0.0;  // motion fraction at which the worst violation occurs
};

// det J of the moved mesh (at dt and at the temporal midpoint) must stay above
// eps_det times the cell's current Jacobian scale.
InvertibilityReport check_invertibility(const Mesh& mesh, const VelocityField& W,
                                        double dt, const QuadratureRule& rule,
                                        double eps_det = 1e-10);

}  // namespace aleidp
