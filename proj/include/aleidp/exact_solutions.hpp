#pragma once

#include "aleidp/euler.hpp"
#include "aleidp/system.hpp"

namespace aleidp {

// Exact solution of the 2D Burgers benchmark (indicator initial data,
// beta = (1,1)), valid for t in (0, 1].
double exact_burgers(const Vec2& x, double t);

// Exact density of the Noh implosion at time t > 0.
double exact_noh_density(const Vec2& x, double t);

// Exact Riemann sampler over the star state; used for the shocktube profile.
class RiemannSampler {
 public:
  RiemannSampler(const EulerPrimitive& left, const EulerPrimitive& right, double gamma);
  // xi = x/t similarity variable along the normal direction.
  EulerPrimitive sample(double xi) const;
  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }

 private:
  EulerPrimitive left_, right_;
  double gamma_, p_star_, u_star_;
};

// Sod shocktube profile at (x1, t); diaphragm at x1 = 0.5.
EulerPrimitive exact_sod(double x1, double t, double gamma = 1.4);

// Swirl field of the rotation benchmark.
Vec2 rotation_velocity(const Vec2& x, double t);

// Exact solution of the rotation benchmark by backward characteristic
// integration (adaptive embedded RK, tolerance tol).
double exact_rotation(const Vec2& x, double t, double tol = 1e-10);

// Adaptive Dormand-Prince 5(4) for the characteristic ODE dx/ds = v(x, s).
Vec2 integrate_characteristic(const Vec2& x0, double t0, double t1,
                              const std::function<Vec2(const Vec2&, double)>& v,
                              double tol);

}  // namespace aleidp
