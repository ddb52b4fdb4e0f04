#include "aleidp/ale_motion.hpp"

#include <cmath>

namespace aleidp {

AleStrategy::BoundaryRule AleStrategy::rule_for(int tag) const {
  for (int bit = 1; bit <= boundary::generic; bit <<= 1) {
    if (!(tag & bit)) continue;
    auto it = boundary.find(bit);
    if (it != boundary.end()) return it->second;
  }
  return BoundaryRule{};  // fixed
}

AleStrategy AleStrategy::analytic(std::function<Vec2(const Vec2&, double)> beta) {
  AleStrategy s;
  s.mode = AleMode::Analytic;
  s.analytic_velocity = std::move(beta);
  return s;
}

AleStrategy AleStrategy::lagrangian() {
  AleStrategy s;
  s.mode = AleMode::Lagrangian;
  return s;
}

AleStrategy AleStrategy::smoothed_lagrangian(double omega, int sweeps) {
  AleStrategy s;
  s.mode = AleMode::SmoothedLagrangian;
  s.omega = omega;
  s.sweeps = sweeps;
  return s;
}

namespace {

Vec2 boundary_velocity(const AleStrategy::BoundaryRule& rule, const Vec2& raw,
                       const Vec2& x, int tag, double t) {
  switch (rule.motion) {
    case BoundaryMotion::Fixed:
      return Vec2::Zero();
    case BoundaryMotion::Slide: {
      // tangential component only: left/right sides slide in y, bottom/top in x
      if (tag & (boundary::left | boundary::right)) return Vec2(0.0, raw[1]);
      if (tag & (boundary::bottom | boundary::top)) return Vec2(raw[0], 0.0);
      return Vec2::Zero();
    }
    case BoundaryMotion::Free:
      return raw;
    case BoundaryMotion::Prescribed:
      return rule.velocity(x, t);
  }
  return Vec2::Zero();
}

}  // namespace

VelocityField node_velocities(const AleStrategy& strategy, const Mesh& mesh,
                              const DofGraph& graph, const StateField& U,
                              const SystemDescriptor& system, double t, double dt) {
  const int n = mesh.n_dofs();
  VelocityField W = VelocityField::Zero(n, 2);
  if (strategy.mode == AleMode::None) return W;

  State Ui(system.m);
  for (int i = 0; i < n; ++i) {
    const Vec2 x = mesh.pos.row(i).transpose();
    Vec2 raw;
    if (strategy.mode == AleMode::Analytic) {
      raw = strategy.analytic_velocity(x, t);
    } else {
      Ui = U.row(i).transpose();
      raw = system.lagrangian_velocity(Ui, x, t);
    }
    if (mesh.dof_tag[i] != boundary::interior)
      raw = boundary_velocity(strategy.rule_for(mesh.dof_tag[i]), raw, x,
                              mesh.dof_tag[i], t);
    W.row(i) = raw.transpose();
  }
  if (mesh.dim == 1) W.col(1).setZero();
  if (strategy.mode != AleMode::SmoothedLagrangian || strategy.sweeps == 0 ||
      strategy.omega == 1.0)
    return W;

  if (dt == 0.0) throw NumericError("smoothed mesh motion needs dt > 0");
  if (mesh.is_periodic())
    throw NumericError("mesh smoothing across periodic seams is not supported");

  // Lagrangian target positions; boundary dofs stay at their policy positions.
  VelocityField a_lag = mesh.pos + dt * W;
  VelocityField a = a_lag;
  VelocityField a_next = a;
  for (int sweep = 0; sweep < strategy.sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      if (mesh.dof_tag[i] != boundary::interior) continue;
      Vec2 sum = Vec2::Zero();
      int count = 0;
      for (int k = graph.row_ptr[i]; k < graph.row_ptr[i + 1]; ++k) {
        const int j = graph.col[k];
        if (j == i) continue;
        sum += a.row(j).transpose();
        ++count;
      }
      a_next.row(i) = (sum / count).transpose();
    }
    std::swap(a, a_next);
  }
  for (int i = 0; i < n; ++i) {
    if (mesh.dof_tag[i] != boundary::interior) continue;
    const Vec2 blended = strategy.omega * a_lag.row(i).transpose() +
                         (1.0 - strategy.omega) * a.row(i).transpose();
    W.row(i) = (blended - mesh.pos.row(i).transpose()).transpose() / dt;
  }
  if (mesh.dim == 1) W.col(1).setZero();
  return W;
}

InvertibilityReport check_invertibility(const Mesh& mesh, const VelocityField& W,
                                        double dt, const QuadratureRule& rule,
                                        double eps_det) {
  InvertibilityReport report;
  for (const double zeta : {0.5, 1.0}) {
    const Mesh probe = mesh.moved(W, zeta * dt);
    for (int c = 0; c < mesh.n_cells(); ++c) {
      double scale = 0.0;
      for (const Vec2& q : rule.points)
        scale = std::max(scale, std::abs(geometric_map(mesh, c, q).detJ));
      for (const Vec2& q : rule.points)
        if (geometric_map(probe, c, q).detJ < eps_det * scale) {
          report.ok = false;
          report.bad_cells.push_back(c);
          report.worst_zeta = zeta;
          break;
        }
    }
    if (!report.ok) break;
  }
  return report;
}

}  // namespace aleidp
