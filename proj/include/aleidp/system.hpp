#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "aleidp/core.hpp"

namespace aleidp {

// Guaranteed bounds on the leftmost/rightmost wave speeds of the projected
// Riemann problem, lam_L <= lam_R.
struct WaveSpan {
  double lam_L = 0.0;
  double lam_R = 0.0;
  double max_abs() const { return std::max(std::abs(lam_L), std::abs(lam_R)); }
};

// Fastest wave speed of the flux translated by a frame moving at w_n along n.
inline double shifted_lambda_max(double lam_L, double lam_R, double w_n) {
  return std::max(std::abs(lam_L - w_n), std::abs(lam_R - w_n));
}

struct EntropyPair {
  std::string name;
  std::function<double(const State&, const Vec2& x, double t)> eta;
  std::function<Vec2(const State&, const Vec2& x, double t)> flux;  // q(U)
};

// A hyperbolic system: flux, wave-speed estimator for the 1D Riemann problem,
// admissibility, entropy pairs, and the velocity used for Lagrangian mesh
// motion.  Immutable after construction; all members are pure functions.
struct SystemDescriptor {
  std::string name;
  int m = 1;
  double gamma = 0.0;  // Euler only

  // Flux matrix m x d. Position and time matter only for the transport system
  // with a space-time velocity field; the nodal values feed the scheme.
  std::function<FluxMat(const State& U, const Vec2& x, double t)> flux;

  // Fan bounds for f(.)·n with data (U_L at x_L, U_R at x_R).
  std::function<WaveSpan(const Vec2& n, const State& UL, const State& UR,
                         const Vec2& xL, const Vec2& xR, double t)>
      wave_span;

  std::function<bool(const State& U)> admissible;

  // grad_u f for scalar systems, the fluid velocity for Euler.
  std::function<Vec2(const State& U, const Vec2& x, double t)> lagrangian_velocity;

  std::vector<EntropyPair> entropy_pairs;

  bool scalar() const { return m == 1; }

  double max_speed(const Vec2& n, const State& UL, const State& UR,
                   const Vec2& xL = Vec2::Zero(), const Vec2& xR = Vec2::Zero(),
                   double t = 0.0) const {
    return wave_span(n, UL, UR, xL, xR, t).max_abs();
  }

  // Local invariant set membership: interval bounds for scalar systems,
  // positivity of density and internal energy for Euler.
  bool in_invariant_hull(const State& U, const State& lo, const State& hi,
                         double slack) const;
};

const EntropyPair& entropy_pair(const SystemDescriptor& system, const std::string& which);

SystemDescriptor make_transport(std::function<Vec2(const Vec2& x, double t)> beta);
SystemDescriptor make_burgers_2d();
SystemDescriptor make_kpp();
SystemDescriptor make_euler(double gamma);

// Problem-name registry used by the CLI.
SystemDescriptor make_system(const std::string& name);

}  // namespace aleidp
