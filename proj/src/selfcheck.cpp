#include "aleidp/selfcheck.hpp"

#include <cmath>
#include <random>

#include "aleidp/euler.hpp"
#include "aleidp/stencil.hpp"

namespace aleidp {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random fully periodic 2D mesh with jiggled dofs; stays valid by bounding the
// jiggle to a fraction of the cell size.
Mesh random_periodic_mesh(Rng& rng) {
  const CellKind kind = uniform_int(rng, 0, 1) ? CellKind::Quad : CellKind::Triangle;
  const int nx = uniform_int(rng, 4, 7);
  const int ny = uniform_int(rng, 4, 7);
  const double Lx = uniform(rng, 0.8, 1.6);
  const double Ly = uniform(rng, 0.8, 1.6);
  Mesh mesh = make_box_mesh(kind, Vec2(0, 0), Vec2(Lx, Ly), nx, ny, true, true);
  const double h = std::min(Lx / nx, Ly / ny);
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    mesh.pos(i, 0) += uniform(rng, -0.15, 0.15) * h;
    mesh.pos(i, 1) += uniform(rng, -0.15, 0.15) * h;
  }
  return mesh;
}

Mesh random_mesh(Rng& rng, bool allow_1d) {
  const int pick = uniform_int(rng, 0, allow_1d ? 2 : 1);
  if (pick == 2) {
    Mesh mesh = make_segment_mesh(0.0, uniform(rng, 0.8, 1.6), uniform_int(rng, 5, 11),
                                  uniform_int(rng, 0, 1) == 1);
    const double h = (mesh.pos(1, 0) - mesh.pos(0, 0));
    for (int i = 0; i < mesh.n_dofs(); ++i)
      if (mesh.dof_tag[i] == boundary::interior)
        mesh.pos(i, 0) += uniform(rng, -0.2, 0.2) * h;
    return mesh;
  }
  if (uniform_int(rng, 0, 1)) return random_periodic_mesh(rng);
  const CellKind kind = pick == 0 ? CellKind::Quad : CellKind::Triangle;
  const int nx = uniform_int(rng, 4, 7);
  const int ny = uniform_int(rng, 4, 7);
  const double Lx = uniform(rng, 0.8, 1.6);
  Mesh mesh = make_box_mesh(kind, Vec2(0, 0), Vec2(Lx, 1.0), nx, ny);
  const double h = std::min(Lx / nx, 1.0 / ny);
  for (int i = 0; i < mesh.n_dofs(); ++i)
    if (mesh.dof_tag[i] == boundary::interior) {
      mesh.pos(i, 0) += uniform(rng, -0.15, 0.15) * h;
      mesh.pos(i, 1) += uniform(rng, -0.15, 0.15) * h;
    }
  return mesh;
}

// Arbitrary valid motion: random per-dof velocities scaled to a fraction of
// the local mesh size per unit of the step bound.
VelocityField random_velocity(Rng& rng, const Mesh& mesh, double scale) {
  VelocityField W(mesh.n_dofs(), 2);
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    W(i, 0) = uniform(rng, -1.0, 1.0) * scale;
    W(i, 1) = mesh.dim == 1 ? 0.0 : uniform(rng, -1.0, 1.0) * scale;
  }
  return W;
}

SystemDescriptor random_system(Rng& rng, int which) {
  switch (which % 4) {
    case 0: {
      const Vec2 beta(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5));
      return make_transport([beta](const Vec2&, double) { return beta; });
    }
    case 1:
      return make_burgers_2d();
    case 2:
      return make_kpp();
    default:
      return make_euler(1.4);
  }
}

StateField random_states(Rng& rng, const SystemDescriptor& sys, int n) {
  StateField U(n, sys.m);
  for (int i = 0; i < n; ++i) {
    if (sys.scalar()) {
      U(i, 0) = uniform(rng, -1.0, 2.0);
    } else {
      const EulerPrimitive prim{uniform(rng, 0.3, 2.0),
                                Vec2(uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)),
                                uniform(rng, 0.1, 2.0)};
      U.row(i) = euler_conserved(prim, sys.gamma).transpose();
    }
  }
  return U;
}

struct AcceptedStep {
  SolverState before, after;
  StencilField stencil;
  std::vector<double> d;
  VelocityField W;
  double dt = 0.0;
};

// Take one accepted forward-Euler step with raw velocities W, halving dt until
// the certificates pass.
AcceptedStep accepted_step(const Mesh& mesh, const StateField& U,
                           const SystemDescriptor& sys, const VelocityField& W,
                           SchemeVersion version) {
  AcceptedStep out;
  out.before.mesh = mesh;
  out.before.U = U;
  const QuadratureRule rule = QuadratureRule::assembly(mesh.kind);
  auto graph = std::make_shared<const DofGraph>(build_dof_graph(mesh));
  out.before.mass = exact_masses(mesh, rule);
  out.stencil = assemble_stencil(mesh, rule, graph);
  out.W = W;

  double dt = estimate_dt(out.before, out.stencil, W, sys, 0.9);
  if (!std::isfinite(dt)) dt = 0.1 * out.stencil.h_min.minCoeff();
  const TimeQuadrature tq = TimeQuadrature::midpoint();
  for (int tries = 0; tries < 30; ++tries, dt *= 0.5) {
    if (!check_invertibility(mesh, W, dt, rule).ok) continue;
    StepResult r = version == SchemeVersion::V1
                       ? euler_step_v1(out.before, W, dt, out.stencil, sys, BcTable::none())
                       : euler_step_v2(out.before, W, dt, sys, BcTable::none(), rule, tq,
                                       graph);
    if (!r.accepted) continue;
    out.after = std::move(r.state);
    out.d = std::move(r.d);
    out.dt = dt;
    if (version == SchemeVersion::V2)
      out.stencil = temporal_stencil(mesh, W, dt, rule, tq, graph);
    return out;
  }
  throw NumericError("selfcheck could not take an accepted step");
}

}  // namespace

CheckResult check_invariant_domain(unsigned seed, int trials) {
  Rng rng(seed);
  CheckResult result{"invariant-domain", false, 0.0, 0.0, ""};
  int violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const SystemDescriptor sys = random_system(rng, trial);
    const Mesh mesh = random_periodic_mesh(rng);
    const StateField U = random_states(rng, sys, mesh.n_dofs());
    const VelocityField W = random_velocity(rng, mesh, uniform(rng, 0.0, 0.6));
    const SchemeVersion version = trial % 2 ? SchemeVersion::V2 : SchemeVersion::V1;
    const AcceptedStep step = accepted_step(mesh, U, sys, W, version);

    const DofGraph& g = *step.stencil.graph;
    const double scale = U.cwiseAbs().maxCoeff();
    for (int i = 0; i < g.n_dofs; ++i) {
      if (sys.scalar()) {
        double lo = U(i, 0), hi = U(i, 0);
        for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
          lo = std::min(lo, U(g.col[k], 0));
          hi = std::max(hi, U(g.col[k], 0));
        }
        const double slack = 1e-12 * std::max(1.0, scale);
        const double v = step.after.U(i, 0);
        const double excess = std::max(lo - v, v - hi);
        result.worst = std::max(result.worst, excess);
        if (excess > slack) ++violations;
      } else {
        const State Ui = step.after.U.row(i).transpose();
        if (!(Ui[0] > 0.0) || !(euler_internal_energy(Ui) > 0.0)) {
          ++violations;
          result.worst = std::max(result.worst, 1.0);
        }
      }
    }
  }
  result.tolerance = 0.0;
  result.pass = violations == 0;
  result.detail = std::to_string(trials) + " random steps (v1/v2, 4 systems), " +
                  std::to_string(violations) + " violations";
  return result;
}

CheckResult check_conservation(unsigned seed, int steps) {
  Rng rng(seed);
  CheckResult result{"conservation", false, 0.0, 1e-12, ""};
  for (int config = 0; config < 4; ++config) {
    const bool euler = config >= 2;
    const SchemeVersion version = config % 2 ? SchemeVersion::V2 : SchemeVersion::V1;
    SystemDescriptor sys = euler ? make_euler(1.4) : make_burgers_2d();

    Mesh mesh = make_box_mesh(config % 2 ? CellKind::Triangle : CellKind::Quad,
                              Vec2(0, 0), Vec2(1, 1), 6, 6, true, true);
    SolverState state;
    state.U.resize(mesh.n_dofs(), sys.m);
    for (int i = 0; i < mesh.n_dofs(); ++i) {
      const Vec2 x = mesh.pos.row(i).transpose();
      const double wig = std::sin(2 * M_PI * x[0]) * std::sin(2 * M_PI * x[1]);
      if (euler)
        state.U.row(i) = euler_conserved({1.0 + 0.2 * wig,
                                          Vec2(0.3 + 0.1 * wig, -0.2),
                                          1.0 + 0.3 * wig},
                                         sys.gamma)
                             .transpose();
      else
        state.U(i, 0) = 0.5 + 0.4 * wig;
    }
    const QuadratureRule rule = QuadratureRule::assembly(mesh.kind);
    auto graph = std::make_shared<const DofGraph>(build_dof_graph(mesh));
    state.mesh = std::move(mesh);
    state.mass = exact_masses(state.mesh, rule);

    State total0 = State::Zero(sys.m);
    for (int i = 0; i < state.mesh.n_dofs(); ++i)
      total0 += state.mass[i] * state.U.row(i).transpose();
    const double scale = std::max(total0.cwiseAbs().maxCoeff(), 1e-30);

    AleStrategy ale = AleStrategy::analytic([](const Vec2& x, double t) {
      return Vec2(0.12 * std::sin(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]) +
                      0.05 * std::cos(3.0 * t),
                  -0.12 * std::cos(2 * M_PI * x[0]) * std::sin(2 * M_PI * x[1]));
    });
    AdvanceConfig cfg;
    cfg.scheme = version;
    cfg.cfl = 0.8;
    for (int n = 0; n < steps; ++n) {
      AdvanceResult step = advance(state, ale, sys, BcTable::none(), cfg, rule, graph,
                                   1e9);
      state = std::move(step.state);
      State total = State::Zero(sys.m);
      for (int i = 0; i < state.mesh.n_dofs(); ++i)
        total += state.mass[i] * state.U.row(i).transpose();
      result.worst =
          std::max(result.worst, (total - total0).cwiseAbs().maxCoeff() / scale);
    }
  }
  result.pass = result.worst <= result.tolerance;
  result.detail = "periodic scalar+Euler, v1+v2, " + std::to_string(steps) +
                  " steps each";
  return result;
}

CheckResult check_dgcl(unsigned seed, int motions) {
  Rng rng(seed);
  CheckResult result{"dgcl", false, 0.0, 1e-14, ""};
  for (int trial = 0; trial < motions; ++trial) {
    const SystemDescriptor sys = random_system(rng, trial);
    const Mesh mesh = random_mesh(rng, /*allow_1d=*/!(sys.m > 1));
    StateField U(mesh.n_dofs(), sys.m);
    const StateField sample = random_states(rng, sys, 1);
    for (int i = 0; i < mesh.n_dofs(); ++i) U.row(i) = sample.row(0);
    const double scale = 1.0 + sample.cwiseAbs().maxCoeff();

    const VelocityField W = random_velocity(rng, mesh, uniform(rng, 0.0, 0.5));
    for (const SchemeVersion version : {SchemeVersion::V1, SchemeVersion::V2}) {
      const AcceptedStep step = accepted_step(mesh, U, sys, W, version);
      result.worst =
          std::max(result.worst, (step.after.U - U).cwiseAbs().maxCoeff() / scale);
    }

    // SSP-RK3 with an analytic strategy of the same magnitude
    const double amp = uniform(rng, 0.0, 0.3);
    AleStrategy ale = AleStrategy::analytic([amp](const Vec2& x, double t) {
      return Vec2(amp * std::sin(2.3 * x[0] + t) * std::cos(1.7 * x[1]),
                  amp * std::cos(1.3 * x[0]) * std::sin(2.9 * x[1] + 0.5 * t));
    });
    if (mesh.dim == 1)
      ale = AleStrategy::analytic([amp](const Vec2& x, double) {
        return Vec2(amp * std::sin(2.3 * x[0]), 0.0);
      });
    SolverState state;
    state.mesh = mesh;
    state.U = U;
    const QuadratureRule rule = QuadratureRule::assembly(mesh.kind);
    auto graph = std::make_shared<const DofGraph>(build_dof_graph(mesh));
    state.mass = exact_masses(mesh, rule);
    AdvanceConfig cfg;
    cfg.integrator = Integrator::SspRk3;
    cfg.cfl = 0.8;
    AdvanceResult step = advance(state, ale, sys, BcTable::none(), cfg, rule, graph, 1e9);
    result.worst =
        std::max(result.worst, (step.state.U - U).cwiseAbs().maxCoeff() / scale);
  }
  result.pass = result.worst <= result.tolerance;
  result.detail = std::to_string(motions) + " random motions, v1+v2+ssp3";
  return result;
}

CheckResult check_equivalence(unsigned seed, int instances) {
  Rng rng(seed);
  CheckResult result{"equivalence", false, 0.0, 1e-12, ""};
  for (int trial = 0; trial < instances; ++trial) {
    const SystemDescriptor sys = random_system(rng, trial);
    const Mesh mesh = random_mesh(rng, !(sys.m > 1));
    const StateField U = random_states(rng, sys, mesh.n_dofs());
    const VelocityField W = random_velocity(rng, mesh, uniform(rng, 0.0, 0.5));
    const SchemeVersion version = trial % 2 ? SchemeVersion::V2 : SchemeVersion::V1;
    const AcceptedStep step = accepted_step(mesh, U, sys, W, version);

    const StateField other = nonconservative_update(step.before, W, step.dt,
                                                    step.stencil, step.d, sys);
    const double scale = 1.0 + U.cwiseAbs().maxCoeff();
    result.worst =
        std::max(result.worst, (other - step.after.U).cwiseAbs().maxCoeff() / scale);
  }
  result.pass = result.worst <= result.tolerance;
  result.detail = std::to_string(instances) + " randomized instances, both forms";
  return result;
}

CheckResult check_gcl_geometry(unsigned seed) {
  Rng rng(seed);
  CheckResult result{"gcl-geometry", false, 0.0, 1e-11, ""};

  double worst_identity = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const Mesh mesh = random_mesh(rng, true);
    const QuadratureRule rule = QuadratureRule::assembly(mesh.kind);
    auto graph = std::make_shared<const DofGraph>(build_dof_graph(mesh));
    const VelocityField W = random_velocity(rng, mesh, uniform(rng, 0.0, 0.4));
    const double h = assemble_stencil(mesh, rule, graph).h_min.minCoeff();
    const double dt = uniform(rng, 0.05, 0.4) * h;
    if (!check_invertibility(mesh, W, dt, rule).ok) continue;

    const StencilField tst =
        temporal_stencil(mesh, W, dt, rule, TimeQuadrature::midpoint(), graph);
    const Eigen::VectorXd m0 = exact_masses(mesh, rule);
    const Eigen::VectorXd m1 = exact_masses(mesh.moved(W, dt), rule);
    const DofGraph& g = *graph;
    for (int i = 0; i < g.n_dofs; ++i) {
      double rhs = 0.0;
      for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
        rhs += W.row(g.col[k]).dot(tst.c[k]);
      worst_identity =
          std::max(worst_identity, std::abs(m1[i] - m0[i] - dt * rhs) / m0[i]);
    }
  }

  // forward-difference transport defect of det J halves with the probe step
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 5, 5);
  VelocityField W(mesh.n_dofs(), 2);
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    const Vec2 x = mesh.pos.row(i).transpose();
    W.row(i) = Vec2(0.3 * std::sin(2.1 * x[0]) + 0.2 * x[1] * x[1],
                    -0.25 * std::cos(1.7 * x[1]) * x[0])
                   .transpose();
  }
  const QuadratureRule rule = QuadratureRule::assembly(CellKind::Quad);
  double ratio_lo = 10.0, ratio_hi = 0.0;
  double prev = liouville_residual(mesh, W, 8e-3, rule);
  for (int halving = 0; halving < 3; ++halving) {
    const double cur = liouville_residual(mesh, W, 8e-3 / (2 << halving) * 2.0, rule);
    const double ratio = prev / cur;
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
    prev = cur;
  }

  result.worst = worst_identity;
  result.pass = worst_identity <= result.tolerance && ratio_lo >= 1.7 && ratio_hi <= 2.3;
  result.detail = "mass identity on random meshes; probe-step ratios in [" +
                  std::to_string(ratio_lo) + "," + std::to_string(ratio_hi) + "]";
  return result;
}

CheckResult check_entropy(unsigned seed, int steps) {
  Rng rng(seed);
  CheckResult result{"entropy", false, 0.0, 1e-12, ""};
  for (int trial = 0; trial < steps; ++trial) {
    const SystemDescriptor sys = random_system(rng, trial % 3);  // scalar systems only
    const Mesh mesh = random_periodic_mesh(rng);
    const StateField U = random_states(rng, sys, mesh.n_dofs());
    const VelocityField W = random_velocity(rng, mesh, uniform(rng, 0.0, 0.5));
    const AcceptedStep step = accepted_step(mesh, U, sys, W, SchemeVersion::V1);

    const Eigen::VectorXd residual =
        entropy_residual(step.before, step.after, step.stencil, step.d, W, sys,
                         entropy_pair(sys, "square"));
    // scale against the magnitudes the residual is assembled from
    const double scale = std::max(
        1.0, step.before.mass.maxCoeff() * U.cwiseAbs().maxCoeff() *
                 U.cwiseAbs().maxCoeff() / step.dt);
    result.worst = std::max(result.worst, residual.maxCoeff() / scale);
  }
  result.pass = result.worst <= result.tolerance;
  result.detail = std::to_string(steps) + " scalar v1 steps, square entropy";
  return result;
}

namespace {

// Independent exact-Riemann fan edges: bisection on the star-pressure
// function, written separately from the production Newton path.
struct OracleFan {
  double left_edge, right_edge;
};

double oracle_phi(double p, double rho_k, double p_k, double gamma) {
  const double c_k = std::sqrt(gamma * p_k / rho_k);
  if (p > p_k)
    return (p - p_k) *
           std::sqrt((2.0 / ((gamma + 1.0) * rho_k)) /
                     (p + (gamma - 1.0) / (gamma + 1.0) * p_k));
  return (2.0 * c_k / (gamma - 1.0)) *
         (std::pow(p / p_k, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

OracleFan oracle_fan(const Vec2& n, const State& UL, const State& UR, double gamma) {
  const double rho_l = UL[0];
  const double ul = (UL[1] * n[0] + UL[2] * n[1]) / rho_l;
  const double pl = (gamma - 1.0) * (UL[3] - 0.5 * (UL[1] * UL[1] + UL[2] * UL[2]) / rho_l);
  const double rho_r = UR[0];
  const double ur = (UR[1] * n[0] + UR[2] * n[1]) / rho_r;
  const double pr = (gamma - 1.0) * (UR[3] - 0.5 * (UR[1] * UR[1] + UR[2] * UR[2]) / rho_r);
  const double cl = std::sqrt(gamma * pl / rho_l);
  const double cr = std::sqrt(gamma * pr / rho_r);

  OracleFan fan;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= ur - ul) {  // vacuum between
    fan.left_edge = ul - cl;
    fan.right_edge = ur + cr;
    return fan;
  }
  double lo = 1e-14 * std::min(pl, pr);
  double hi = std::max(pl, pr);
  auto f = [&](double p) { return oracle_phi(p, rho_l, pl, gamma) +
                                  oracle_phi(p, rho_r, pr, gamma) + (ur - ul); };
  while (f(hi) < 0.0) hi *= 4.0;
  if (f(lo) > 0.0) hi = lo;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
    if (hi - lo <= 1e-14 * hi) break;
  }
  const double p_star = 0.5 * (lo + hi);

  if (p_star > pl)
    fan.left_edge = ul - cl * std::sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / pl +
                                        (gamma - 1.0) / (2.0 * gamma));
  else
    fan.left_edge = ul - cl;
  if (p_star > pr)
    fan.right_edge = ur + cr * std::sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / pr +
                                         (gamma - 1.0) / (2.0 * gamma));
  else
    fan.right_edge = ur + cr;
  return fan;
}

}  // namespace

CheckResult check_wave_speeds(unsigned seed, int pairs) {
  Rng rng(seed);
  CheckResult result{"wave-speeds", false, 0.0, 1e-8, ""};
  const double gamma = 1.4;
  int failures = 0;

  for (int trial = 0; trial < pairs; ++trial) {
    const double angle = uniform(rng, 0.0, 2.0 * M_PI);
    const Vec2 n(std::cos(angle), std::sin(angle));
    auto random_state = [&]() {
      const double rho = std::pow(10.0, uniform(rng, -3.0, 2.0));
      const double p = std::pow(10.0, uniform(rng, -3.0, 2.0));
      const Vec2 u(uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0));
      return euler_conserved({rho, u, p}, gamma);
    };
    const State UL = random_state();
    const State UR = random_state();
    const EulerFanBounds fan = euler_wave_speeds(n, UL, UR, gamma);
    const OracleFan truth = oracle_fan(n, UL, UR, gamma);
    const double scale = std::max({1.0, std::abs(truth.left_edge),
                                   std::abs(truth.right_edge)});
    const double defect = std::max(fan.lam_L - truth.left_edge,
                                   truth.right_edge - fan.lam_R) /
                          scale;
    result.worst = std::max(result.worst, defect);
    if (defect > result.tolerance) ++failures;
  }

  // scalar dominance over sampled |f'(s)·n|
  double scalar_worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    for (int which = 0; which < 3; ++which) {
      const SystemDescriptor sys = random_system(rng, which);
      const double angle = uniform(rng, 0.0, 2.0 * M_PI);
      const Vec2 n(std::cos(angle), std::sin(angle));
      State a(1), b(1);
      a[0] = uniform(rng, -3.0, 3.0);
      b[0] = uniform(rng, -3.0, 3.0);
      const double bound = sys.max_speed(n, a, b, Vec2(0.3, 0.4), Vec2(0.3, 0.4), 0.0);
      for (int s = 0; s <= 100; ++s) {
        const double us = a[0] + (b[0] - a[0]) * s / 100.0;
        double speed = 0.0;
        if (sys.name == "transport") {
          State one(1);
          one[0] = 1.0;
          speed = std::abs(sys.flux(one, Vec2(0.3, 0.4), 0.0).row(0).dot(n));
        } else if (sys.name == "burgers2d") {
          speed = std::abs(us * (n[0] + n[1]));
        } else {
          speed = std::abs(std::cos(us) * n[0] - std::sin(us) * n[1]);
        }
        scalar_worst = std::max(scalar_worst, speed - bound);
        if (speed - bound > 1e-12) ++failures;
      }
    }
  }

  result.pass = failures == 0;
  result.detail = std::to_string(pairs) + " Euler pairs vs bisection oracle (worst " +
                  std::to_string(result.worst) + "), scalar sampling worst " +
                  std::to_string(scalar_worst);
  return result;
}

std::vector<CheckResult> property_suites(unsigned seed, const SuiteCounts& counts) {
  return {check_invariant_domain(seed, counts.invariant_steps),
          check_conservation(seed + 1, counts.conservation_steps),
          check_dgcl(seed + 2, counts.dgcl_motions),
          check_equivalence(seed + 3, counts.equivalence_instances),
          check_gcl_geometry(seed + 4),
          check_entropy(seed + 5, counts.entropy_steps),
          check_wave_speeds(seed + 6, counts.wave_speed_pairs)};
}

}  // namespace aleidp
