#include "aleidp/exact_solutions.hpp"

#include <cmath>

namespace aleidp {

double exact_burgers(const Vec2& x, double t) {
  double x1 = x[0], x2 = x[1];
  if (x2 > x1) std::swap(x1, x2);  // reflection symmetry across the diagonal
  const double alpha = x1 - x2;
  const double alpha0 = 1.0 - 0.5 * t;
  if (alpha > 1.0) return 0.0;
  if (alpha <= alpha0) {
    if (x2 >= 0.0 && x2 < t) return x2 / t;
    if (x2 >= t && x2 < 0.5 * t + 1.0 - alpha) return 1.0;
    return 0.0;
  }
  if (x2 >= 0.0 && x2 < std::sqrt(2.0 * t * (1.0 - alpha))) return x2 / t;
  return 0.0;
}

double exact_noh_density(const Vec2& x, double t) {
  const double r = x.norm();
  if (r < t / 3.0) return 16.0;
  return 1.0 + t / r;
}

RiemannSampler::RiemannSampler(const EulerPrimitive& left, const EulerPrimitive& right,
                               double gamma)
    : left_(left), right_(right), gamma_(gamma) {
  const EulerFanBounds fan = euler_wave_speeds(
      Vec2(1.0, 0.0), euler_conserved(left, gamma), euler_conserved(right, gamma), gamma);
  p_star_ = fan.p_star;
  u_star_ = fan.u_star;
}

EulerPrimitive RiemannSampler::sample(double xi) const {
  const double g = gamma_;
  const double beta = (g - 1.0) / (g + 1.0);
  if (xi <= u_star_) {
    const EulerPrimitive& s = left_;
    const double c = s.sound_speed(g);
    if (p_star_ > s.p) {  // left shock
      const double S = s.u[0] - c * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / s.p +
                                              (g - 1.0) / (2.0 * g));
      if (xi <= S) return s;
      const double ratio = p_star_ / s.p;
      return {s.rho * (ratio + beta) / (beta * ratio + 1.0), Vec2(u_star_, 0.0), p_star_};
    }
    const double head = s.u[0] - c;
    if (xi <= head) return s;
    const double c_star = c * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ - c_star;
    if (xi >= tail)
      return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), Vec2(u_star_, 0.0), p_star_};
    const double factor = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c) * (s.u[0] - xi);
    return {s.rho * std::pow(factor, 2.0 / (g - 1.0)),
            Vec2(2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * s.u[0] + xi), 0.0),
            s.p * std::pow(factor, 2.0 * g / (g - 1.0))};
  }
  const EulerPrimitive& s = right_;
  const double c = s.sound_speed(g);
  if (p_star_ > s.p) {  // right shock
    const double S = s.u[0] + c * std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / s.p +
                                            (g - 1.0) / (2.0 * g));
    if (xi >= S) return s;
    const double ratio = p_star_ / s.p;
    return {s.rho * (ratio + beta) / (beta * ratio + 1.0), Vec2(u_star_, 0.0), p_star_};
  }
  const double head = s.u[0] + c;
  if (xi >= head) return s;
  const double c_star = c * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
  const double tail = u_star_ + c_star;
  if (xi <= tail)
    return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), Vec2(u_star_, 0.0), p_star_};
  const double factor = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c) * (s.u[0] - xi);
  return {s.rho * std::pow(factor, 2.0 / (g - 1.0)),
          Vec2(2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * s.u[0] + xi), 0.0),
          s.p * std::pow(factor, 2.0 * g / (g - 1.0))};
}

EulerPrimitive exact_sod(double x1, double t, double gamma) {
  static const RiemannSampler sod({1.0, Vec2::Zero(), 1.0}, {0.125, Vec2::Zero(), 0.1},
                                  1.4);
  if (gamma == 1.4) {
    if (t <= 0.0) return x1 <= 0.5 ? EulerPrimitive{1.0, Vec2::Zero(), 1.0}
                                   : EulerPrimitive{0.125, Vec2::Zero(), 0.1};
    return sod.sample((x1 - 0.5) / t);
  }
  RiemannSampler custom({1.0, Vec2::Zero(), 1.0}, {0.125, Vec2::Zero(), 0.1}, gamma);
  return custom.sample((x1 - 0.5) / t);
}

Vec2 rotation_velocity(const Vec2& x, double t) {
  return Vec2(std::sin(M_PI * x[0]) * std::cos(M_PI * x[1]) * std::cos(2.0 * M_PI * t),
              -std::cos(M_PI * x[0]) * std::sin(M_PI * x[1]) * std::cos(2.0 * M_PI * t));
}

namespace {

// Dormand-Prince 5(4) pair.
constexpr double kA[7][6] = {
    {0, 0, 0, 0, 0, 0},
    {1.0 / 5, 0, 0, 0, 0, 0},
    {3.0 / 40, 9.0 / 40, 0, 0, 0, 0},
    {44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, 0},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0, 0},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656, 0},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kC[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kB5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0};
constexpr double kB4[7] = {5179.0 / 57600,    0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

Vec2 integrate_characteristic(const Vec2& x0, double t0, double t1,
                              const std::function<Vec2(const Vec2&, double)>& v,
                              double tol) {
  Vec2 x = x0;
  double t = t0;
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  double h = dir * std::max(1e-6, std::abs(t1 - t0) / 50.0);
  int steps = 0;
  while (dir * (t1 - t) > 1e-15) {
    if (++steps > 100000) throw NumericError("characteristic integration stalled");
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    Vec2 k[7];
    k[0] = v(x, t);
    for (int s = 1; s < 7; ++s) {
      Vec2 xs = x;
      for (int j = 0; j < s; ++j) xs += h * kA[s][j] * k[j];
      k[s] = v(xs, t + kC[s] * h);
    }
    Vec2 x5 = x, x4 = x;
    for (int s = 0; s < 7; ++s) {
      x5 += h * kB5[s] * k[s];
      x4 += h * kB4[s] * k[s];
    }
    const double err = (x5 - x4).norm() / std::max(1.0, x5.norm());
    if (err <= tol) {
      x = x5;
      t += h;
    }
    const double shrink = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 2.0;
    h *= std::min(2.0, std::max(0.2, shrink));
  }
  return x;
}

double exact_rotation(const Vec2& x, double t, double tol) {
  if (t == 0.0) return x[0] + x[1];
  const Vec2 origin = integrate_characteristic(x, t, 0.0, rotation_velocity, tol);
  return origin[0] + origin[1];
}

}  // namespace aleidp
