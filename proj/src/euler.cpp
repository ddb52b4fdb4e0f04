#include "aleidp/euler.hpp"

#include <cmath>

namespace aleidp {

State euler_conserved(const EulerPrimitive& prim, double gamma) {
  State U(4);
  U[0] = prim.rho;
  U[1] = prim.rho * prim.u[0];
  U[2] = prim.rho * prim.u[1];
  U[3] = prim.total_energy(gamma);
  return U;
}

EulerPrimitive euler_primitive(const State& U, double gamma) {
  EulerPrimitive prim;
  prim.rho = U[0];
  prim.u = Vec2(U[1], U[2]) / U[0];
  prim.p = euler_pressure(U, gamma);
  return prim;
}

namespace {

struct Side {
  double rho, un, p, c;
};

// Value and derivative of the standard star-pressure function for one side:
// Rankine-Hugoniot branch for p > p_K, isentropic branch otherwise.
void pressure_function(double p, const Side& s, double gamma, double& f, double& df) {
  if (p > s.p) {
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(A / (p + B));
    f = (p - s.p) * root;
    df = root * (1.0 - 0.5 * (p - s.p) / (p + B));
  } else {
    const double g1 = (gamma - 1.0) / (2.0 * gamma);
    const double ratio = std::pow(p / s.p, g1);
    f = 2.0 * s.c / (gamma - 1.0) * (ratio - 1.0);
    df = ratio / (s.rho * s.c * p / s.p);
  }
}

double two_rarefaction_pstar(const Side& L, const Side& R, double gamma) {
  const double g1 = (gamma - 1.0) / (2.0 * gamma);
  const double num = L.c + R.c - 0.5 * (gamma - 1.0) * (R.un - L.un);
  if (num <= 0.0) return 0.0;
  const double den = L.c / std::pow(L.p, g1) + R.c / std::pow(R.p, g1);
  return std::pow(num / den, 1.0 / g1);
}

}  // namespace

EulerFanBounds euler_wave_speeds(const Vec2& n, const State& UL, const State& UR,
                                 double gamma) {
  const EulerPrimitive pl = euler_primitive(UL, gamma);
  const EulerPrimitive pr = euler_primitive(UR, gamma);
  const Side L{pl.rho, pl.u.dot(n), std::max(pl.p, 0.0), 0.0};
  const Side R{pr.rho, pr.u.dot(n), std::max(pr.p, 0.0), 0.0};
  Side Lc = L, Rc = R;
  Lc.c = std::sqrt(gamma * Lc.p / Lc.rho);
  Rc.c = std::sqrt(gamma * Rc.p / Rc.rho);

  EulerFanBounds out;

  // Vacuum-generating data: the fan is bounded by the rarefaction tails.
  const double du = Rc.un - Lc.un;
  if (2.0 * (Lc.c + Rc.c) / (gamma - 1.0) <= du) {
    out.p_star = 0.0;
    out.u_star = 0.5 * (Lc.un + Rc.un);
    out.lam_L = Lc.un - Lc.c;
    out.lam_R = Rc.un + Rc.c;
    return out;
  }

  double p = two_rarefaction_pstar(Lc, Rc, gamma);
  p = std::max(p, 1e-14 * std::max(Lc.p, Rc.p));
  double fl = 0, fr = 0, dfl = 0, dfr = 0;
  bool converged = false;
  int it = 0;
  for (; it < 100; ++it) {
    pressure_function(p, Lc, gamma, fl, dfl);
    pressure_function(p, Rc, gamma, fr, dfr);
    const double g = fl + fr + du;
    const double dg = dfl + dfr;
    double step = g / dg;
    double p_new = p - step;
    if (p_new <= 0.0) p_new = 0.5 * p;
    if (std::abs(p_new - p) <= 1e-10 * (p + p_new)) {
      p = p_new;
      converged = true;
      break;
    }
    p = p_new;
  }
  if (!converged) p = two_rarefaction_pstar(Lc, Rc, gamma);

  out.p_star = p;
  pressure_function(p, Lc, gamma, fl, dfl);
  pressure_function(p, Rc, gamma, fr, dfr);
  out.u_star = 0.5 * (Lc.un + Rc.un) + 0.5 * (fr - fl);
  out.iterations = it;
  out.newton_converged = converged;

  const double gq = (gamma + 1.0) / (2.0 * gamma);
  const double qL = std::sqrt(1.0 + gq * std::max(p / Lc.p - 1.0, 0.0));
  const double qR = std::sqrt(1.0 + gq * std::max(p / Rc.p - 1.0, 0.0));
  out.lam_L = Lc.un - Lc.c * qL;
  out.lam_R = Rc.un + Rc.c * qR;
  return out;
}

}  // namespace aleidp
