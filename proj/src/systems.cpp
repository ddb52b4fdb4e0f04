#include "aleidp/system.hpp"

#include <cmath>

#include "aleidp/euler.hpp"

namespace aleidp {

bool SystemDescriptor::in_invariant_hull(const State& U, const State& lo,
                                         const State& hi, double slack) const {
  if (scalar()) return U[0] >= lo[0] - slack && U[0] <= hi[0] + slack;
  return U[0] > 0.0 && euler_internal_energy(U) > -slack;
}

const EntropyPair& entropy_pair(const SystemDescriptor& system, const std::string& which) {
  for (const auto& pair : system.entropy_pairs)
    if (pair.name == which) return pair;
  throw NumericError("no entropy pair '" + which + "' registered for " + system.name);
}

namespace {

// Extremes of cos over [a, b]: +/-1 when the interval contains a multiple of
// pi of the right parity, endpoint values otherwise.
void cos_range(double a, double b, double& lo, double& hi) {
  const double ca = std::cos(a);
  const double cb = std::cos(b);
  lo = std::min(ca, cb);
  hi = std::max(ca, cb);
  const double pi = M_PI;
  const double k_hi = std::ceil(a / (2.0 * pi));
  if (2.0 * pi * k_hi <= b) hi = 1.0;
  const double k_lo = std::ceil((a - pi) / (2.0 * pi));
  if (2.0 * pi * k_lo + pi <= b) lo = -1.0;
}

}  // namespace

SystemDescriptor make_transport(std::function<Vec2(const Vec2& x, double t)> beta) {
  SystemDescriptor sys;
  sys.name = "transport";
  sys.m = 1;
  auto beta_fn = std::move(beta);
  sys.flux = [beta_fn](const State& U, const Vec2& x, double t) {
    FluxMat f(1, 2);
    f.row(0) = (beta_fn(x, t) * U[0]).transpose();
    return f;
  };
  sys.wave_span = [beta_fn](const Vec2& n, const State&, const State&, const Vec2& xL,
                            const Vec2& xR, double t) {
    const double sL = beta_fn(xL, t).dot(n);
    const double sR = beta_fn(xR, t).dot(n);
    return WaveSpan{std::min(sL, sR), std::max(sL, sR)};
  };
  sys.admissible = [](const State&) { return true; };
  sys.lagrangian_velocity = [beta_fn](const State&, const Vec2& x, double t) {
    return beta_fn(x, t);
  };
  sys.entropy_pairs.push_back(
      {"square",
       [](const State& U, const Vec2&, double) { return 0.5 * U[0] * U[0]; },
       [beta_fn](const State& U, const Vec2& x, double t) {
         return Vec2(beta_fn(x, t) * 0.5 * U[0] * U[0]);
       }});
  return sys;
}

SystemDescriptor make_burgers_2d() {
  SystemDescriptor sys;
  sys.name = "burgers2d";
  sys.m = 1;
  const Vec2 beta(1.0, 1.0);
  sys.flux = [beta](const State& U, const Vec2&, double) {
    FluxMat f(1, 2);
    f.row(0) = (0.5 * U[0] * U[0] * beta).transpose();
    return f;
  };
  // f'(s)·n = s (beta·n) is monotone in s, so the endpoint speeds bound the fan.
  sys.wave_span = [beta](const Vec2& n, const State& UL, const State& UR, const Vec2&,
                         const Vec2&, double) {
    const double bn = beta.dot(n);
    const double sL = UL[0] * bn;
    const double sR = UR[0] * bn;
    return WaveSpan{std::min(sL, sR), std::max(sL, sR)};
  };
  sys.admissible = [](const State&) { return true; };
  sys.lagrangian_velocity = [beta](const State& U, const Vec2&, double) {
    return Vec2(U[0] * beta);
  };
  sys.entropy_pairs.push_back(
      {"square",
       [](const State& U, const Vec2&, double) { return 0.5 * U[0] * U[0]; },
       [beta](const State& U, const Vec2&, double) {
         return Vec2(beta * U[0] * U[0] * U[0] / 3.0);
       }});
  return sys;
}

SystemDescriptor make_kpp() {
  SystemDescriptor sys;
  sys.name = "kpp";
  sys.m = 1;
  sys.flux = [](const State& U, const Vec2&, double) {
    FluxMat f(1, 2);
    f(0, 0) = std::sin(U[0]);
    f(0, 1) = std::cos(U[0]);
    return f;
  };
  // f'(s)·n = cos(s + phi) with phi = atan2(n2, n1); exact range over the data
  // interval, never an under-estimate.
  sys.wave_span = [](const Vec2& n, const State& UL, const State& UR, const Vec2&,
                     const Vec2&, double) {
    const double phi = std::atan2(n[1], n[0]);
    const double a = std::min(UL[0], UR[0]) + phi;
    const double b = std::max(UL[0], UR[0]) + phi;
    WaveSpan span;
    cos_range(a, b, span.lam_L, span.lam_R);
    return span;
  };
  sys.admissible = [](const State&) { return true; };
  sys.lagrangian_velocity = [](const State& U, const Vec2&, double) {
    return Vec2(std::cos(U[0]), -std::sin(U[0]));
  };
  sys.entropy_pairs.push_back(
      {"square",
       [](const State& U, const Vec2&, double) { return 0.5 * U[0] * U[0]; },
       [](const State& U, const Vec2&, double) {
         const double u = U[0];
         return Vec2(u * std::sin(u) + std::cos(u) - 1.0,
                     u * std::cos(u) - std::sin(u));
       }});
  return sys;
}

SystemDescriptor make_euler(double gamma) {
  if (!(gamma > 1.0)) throw NumericError("Euler needs gamma > 1");
  SystemDescriptor sys;
  sys.name = "euler";
  sys.m = 4;
  sys.gamma = gamma;
  sys.flux = [gamma](const State& U, const Vec2&, double) {
    if (!euler_admissible(U)) throw NumericError("flux queried on non-admissible Euler state");
    const double rho = U[0];
    const Vec2 u(U[1] / rho, U[2] / rho);
    const double p = euler_pressure(U, gamma);
    FluxMat f(4, 2);
    f.row(0) = (rho * u).transpose();
    f.row(1) = (U[1] * u + p * Vec2(1, 0)).transpose();
    f.row(2) = (U[2] * u + p * Vec2(0, 1)).transpose();
    f.row(3) = ((U[3] + p) * u).transpose();
    return f;
  };
  sys.wave_span = [gamma](const Vec2& n, const State& UL, const State& UR, const Vec2&,
                          const Vec2&, double) {
    const EulerFanBounds fan = euler_wave_speeds(n, UL, UR, gamma);
    return WaveSpan{fan.lam_L, fan.lam_R};
  };
  sys.admissible = [](const State& U) { return euler_admissible(U); };
  sys.lagrangian_velocity = [](const State& U, const Vec2&, double) {
    return Vec2(U[1] / U[0], U[2] / U[0]);
  };
  sys.entropy_pairs.push_back(
      {"physical",
       [gamma](const State& U, const Vec2&, double) {
         const double p = euler_pressure(U, gamma);
         return -U[0] * std::log(p * std::pow(U[0], -gamma)) / (gamma - 1.0);
       },
       [gamma](const State& U, const Vec2&, double) {
         const double p = euler_pressure(U, gamma);
         const double eta = -U[0] * std::log(p * std::pow(U[0], -gamma)) / (gamma - 1.0);
         return Vec2(eta * U[1] / U[0], eta * U[2] / U[0]);
       }});
  return sys;
}

SystemDescriptor make_system(const std::string& name) {
  if (name == "transport" || name == "rotation") {
    return make_transport([](const Vec2& x, double t) {
      return Vec2(std::sin(M_PI * x[0]) * std::cos(M_PI * x[1]) * std::cos(2.0 * M_PI * t),
                  -std::cos(M_PI * x[0]) * std::sin(M_PI * x[1]) * std::cos(2.0 * M_PI * t));
    });
  }
  if (name == "burgers2d" || name == "burgers") return make_burgers_2d();
  if (name == "kpp") return make_kpp();
  if (name == "euler" || name == "sod") return make_euler(1.4);
  if (name == "noh") return make_euler(5.0 / 3.0);
  throw NumericError("unknown system: " + name);
}

}  // namespace aleidp
