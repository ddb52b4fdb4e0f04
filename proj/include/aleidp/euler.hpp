#pragma once

#include "aleidp/core.hpp"

namespace aleidp {

// Primitive variables of the ideal-gas Euler system.
struct EulerPrimitive {
  double rho = 1.0;
  Vec2 u = Vec2::Zero();
  double p = 1.0;

  double sound_speed(double gamma) const { return std::sqrt(gamma * p / rho); }
  double total_energy(double gamma) const {
    return p / (gamma - 1.0) + 0.5 * rho * u.squaredNorm();
  }
};

State euler_conserved(const EulerPrimitive& prim, double gamma);
EulerPrimitive euler_primitive(const State& U, double gamma);

inline double euler_internal_energy(const State& U) {
  return U[3] - 0.5 * (U[1] * U[1] + U[2] * U[2]) / U[0];
}
inline double euler_pressure(const State& U, double gamma) {
  return (gamma - 1.0) * euler_internal_energy(U);
}
inline bool euler_admissible(const State& U) {
  return U[0] > 0.0 && euler_internal_energy(U) > 0.0;
}

// Bounds on the extreme wave speeds of the exact Riemann solution projected on
// n, via the star pressure. lam_L <= lam_R enclose the whole fan.
struct EulerFanBounds {
  double lam_L = 0.0;
  double lam_R = 0.0;
  double p_star = 0.0;
  double u_star = 0.0;
  int iterations = 0;
  bool newton_converged = true;  // false -> two-rarefaction fallback was used
};

EulerFanBounds euler_wave_speeds(const Vec2& n, const State& UL, const State& UR,
                                 double gamma);

}  // namespace aleidp
