#include "aleidp/solver.hpp"

#include <cmath>

namespace aleidp {

void BcTable::set_dirichlet(int bits, std::function<State(const Vec2&, double)> value) {
  for (int bit = 1; bit <= boundary::generic; bit <<= 1)
    if (bits & bit) entries[bit] = BcEntry{BcEntry::Dirichlet, value};
}

const BcEntry* BcTable::dirichlet_for(int tag) const {
  for (int bit = 1; bit <= boundary::generic; bit <<= 1) {
    if (!(tag & bit)) continue;
    auto it = entries.find(bit);
    if (it != entries.end() && it->second.kind == BcEntry::Dirichlet) return &it->second;
  }
  return nullptr;
}

void apply_bc(SolverState& state, const BcTable& bc, double t) {
  if (bc.entries.empty()) return;
  for (int i = 0; i < state.mesh.n_dofs(); ++i) {
    const int tag = state.mesh.dof_tag[i];
    if (tag == boundary::interior) continue;
    if (const BcEntry* entry = bc.dirichlet_for(tag))
      state.U.row(i) = entry->value(state.mesh.pos.row(i).transpose(), t).transpose();
  }
}

namespace {

// Shifted fan speeds for one ordered pair; the mirrored orientation reuses the
// span through the reflection symmetry lam(n,A,B) = -lam(-n,B,A) when
// c_ji = -c_ij holds exactly (interior pairs after symmetrization).
struct PairSpeeds {
  double forward = 0.0;   // lambda_max(g_j, n_ij, U_i, U_j)
  double backward = 0.0;  // lambda_max(g_i, n_ji, U_j, U_i)
  double unshifted = 0.0;
};

PairSpeeds pair_speeds(const StencilField& st, int entry, int entry_t, int i, int j,
                       const StateField& U, const VelocityField& W,
                       const SystemDescriptor& sys, const Mesh& mesh, double t) {
  PairSpeeds out;
  const Vec2 cij = st.c[entry];
  const Vec2 cji = st.c[entry_t];
  const double nij = cij.norm();
  const double nji = cji.norm();
  if (nij == 0.0 && nji == 0.0) return out;

  const State Ui = U.row(i).transpose();
  const State Uj = U.row(j).transpose();
  const Vec2 xi = mesh.pos.row(i).transpose();
  const Vec2 xj = mesh.pos.row(j).transpose();

  WaveSpan span_f{0.0, 0.0};
  bool have_f = false;
  if (nij > 0.0) {
    const Vec2 n = cij / nij;
    span_f = sys.wave_span(n, Ui, Uj, xi, xj, t);
    have_f = true;
    out.forward = shifted_lambda_max(span_f.lam_L, span_f.lam_R, W.row(j).dot(n));
    out.unshifted = std::max(out.unshifted, span_f.max_abs());
  }
  if (nji > 0.0) {
    WaveSpan span_b;
    const Vec2 n = cji / nji;
    if (have_f && cji[0] == -cij[0] && cji[1] == -cij[1]) {
      span_b = WaveSpan{-span_f.lam_R, -span_f.lam_L};
    } else {
      span_b = sys.wave_span(n, Uj, Ui, xj, xi, t);
    }
    out.backward = shifted_lambda_max(span_b.lam_L, span_b.lam_R, W.row(i).dot(n));
    out.unshifted = std::max(out.unshifted, span_b.max_abs());
  }
  return out;
}

State column_total(const Eigen::VectorXd& mass, const StateField& U) {
  State total = State::Zero(U.cols());
  for (int i = 0; i < U.rows(); ++i) total += mass[i] * U.row(i).transpose();
  return total;
}

// Conservative update shared by both versions.
void apply_update(const SolverState& s, const VelocityField& W, double dt,
                  const StencilField& st, const std::vector<double>& d,
                  const Eigen::VectorXd& mass_next, const SystemDescriptor& sys,
                  StateField& U_next) {
  const DofGraph& g = *st.graph;
  const int m = sys.m;
  std::vector<FluxMat> G(g.n_dofs);  // f(U_j) - U_j (x) W_j
  State Uj(m);
  for (int j = 0; j < g.n_dofs; ++j) {
    Uj = s.U.row(j).transpose();
    G[j] = sys.flux(Uj, s.mesh.pos.row(j).transpose(), s.t);
    G[j].col(0) -= W(j, 0) * Uj;
    G[j].col(1) -= W(j, 1) * Uj;
  }
  U_next.resize(g.n_dofs, m);
  State acc(m);
  for (int i = 0; i < g.n_dofs; ++i) {
    acc.setZero();
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      acc += G[j] * st.c[k] - d[k] * s.U.row(j).transpose();
    }
    U_next.row(i) = (s.mass[i] * s.U.row(i).transpose() - dt * acc).transpose() / mass_next[i];
  }
}

bool convexity_certificate(const StencilField& st, const std::vector<double>& d,
                           double dt, const Eigen::VectorXd& mass_next,
                           double& min_coeff) {
  const DofGraph& g = *st.graph;
  min_coeff = 1.0;
  for (int i = 0; i < g.n_dofs; ++i) {
    double sum = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      if (g.col[k] != i) sum += d[k];
    min_coeff = std::min(min_coeff, 1.0 - 2.0 * sum * dt / mass_next[i]);
  }
  return min_coeff >= 0.0;
}

}  // namespace

std::vector<double> compute_dij(const StencilField& st, const StateField& U,
                                const VelocityField& W, const SystemDescriptor& sys,
                                const Mesh& mesh, double t) {
  const DofGraph& g = *st.graph;
  std::vector<double> d(g.col.size(), 0.0);
  for (int i = 0; i < g.n_dofs; ++i) {
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      if (j <= i) continue;
      const int kt = g.trans[k];
      const PairSpeeds sp = pair_speeds(st, k, kt, i, j, U, W, sys, mesh, t);
      const double dij = std::max(sp.forward * st.c[k].norm(), sp.backward * st.c[kt].norm());
      if (std::isnan(dij))
        throw NumericError("NaN wave speed for dof pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      d[k] = dij;
      d[kt] = dij;
    }
  }
  for (int i = 0; i < g.n_dofs; ++i) {
    double sum = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      if (g.col[k] != i) sum += d[k];
    d[g.diag[i]] = -sum;
  }
  return d;
}

StepResult euler_step_v1(const SolverState& s, const VelocityField& W, double dt,
                         const StencilField& st, const SystemDescriptor& sys,
                         const BcTable& bc, const StepOptions& opt) {
  const DofGraph& g = *st.graph;
  StepResult r;
  r.report.dt = dt;
  r.report.max_rowsum_defect = st.max_rowsum_defect();
  r.report.total_before = column_total(s.mass, s.U);

  r.d = opt.viscosity ? compute_dij(st, s.U, W, sys, s.mesh, s.t)
                      : std::vector<double>(g.col.size(), 0.0);

  // mass update through the discrete divergence identity; equals the
  // div(w) integral because w lives in the approximation space
  r.mass_next = s.mass;
  for (int i = 0; i < g.n_dofs; ++i) {
    double flow = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      flow += W.row(g.col[k]).dot(st.c[k]);
    r.mass_next[i] += dt * flow;
    if (!(r.mass_next[i] > 0.0)) {
      r.reject_reason = "non-positive mass at dof " + std::to_string(i);
      return r;
    }
  }
  if (!convexity_certificate(st, r.d, dt, r.mass_next, r.report.min_convexity)) {
    r.reject_reason = "convexity certificate failed";
    return r;
  }

  r.state = s;
  apply_update(s, W, dt, st, r.d, r.mass_next, sys, r.state.U);
  r.state.mass = r.mass_next;
  r.state.mesh.move(W, dt);
  r.state.t = s.t + dt;
  r.state.step = s.step + 1;
  apply_bc(r.state, bc, r.state.t);
  r.report.total_after = column_total(r.state.mass, r.state.U);
  r.accepted = true;
  return r;
}

StepResult euler_step_v2(const SolverState& s, const VelocityField& W, double dt,
                         const SystemDescriptor& sys, const BcTable& bc,
                         const QuadratureRule& rule, const TimeQuadrature& tq,
                         std::shared_ptr<const DofGraph> graph, const StepOptions& opt) {
  StepResult r;
  r.report.dt = dt;

  StencilField st;
  try {
    st = temporal_stencil(s.mesh, W, dt, rule, tq, graph);
  } catch (const MeshError& err) {
    r.reject_reason = err.what();
    return r;
  }
  r.report.max_rowsum_defect = st.max_rowsum_defect();
  r.report.total_before = column_total(s.mass, s.U);

  r.d = opt.viscosity ? compute_dij(st, s.U, W, sys, s.mesh, s.t)
                      : std::vector<double>(graph->col.size(), 0.0);

  Mesh mesh_next = s.mesh.moved(W, dt);
  try {
    r.mass_next = exact_masses(mesh_next, rule);
  } catch (const std::runtime_error& err) {
    r.reject_reason = err.what();
    return r;
  }
  if (!convexity_certificate(st, r.d, dt, r.mass_next, r.report.min_convexity)) {
    r.reject_reason = "convexity certificate failed";
    return r;
  }

  r.state = s;
  apply_update(s, W, dt, st, r.d, r.mass_next, sys, r.state.U);
  r.state.mass = r.mass_next;
  r.state.mesh = std::move(mesh_next);
  r.state.t = s.t + dt;
  r.state.step = s.step + 1;
  apply_bc(r.state, bc, r.state.t);
  r.report.total_after = column_total(r.state.mass, r.state.U);
  r.accepted = true;
  return r;
}

double estimate_dt(const SolverState& s, const StencilField& st, const VelocityField& W,
                   const SystemDescriptor& sys, double cfl, double dt_max,
                   DtConvention convention) {
  const DofGraph& g = *st.graph;
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(g.n_dofs);
  for (int i = 0; i < g.n_dofs; ++i) {
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      if (j <= i) continue;
      const PairSpeeds sp = pair_speeds(st, k, g.trans[k], i, j, s.U, W, sys, s.mesh, s.t);
      double pair_lam = std::max(sp.forward, sp.backward);
      if (convention == DtConvention::Mesh) pair_lam = std::max(pair_lam, sp.unshifted);
      lam[i] = std::max(lam[i], pair_lam);
      lam[j] = std::max(lam[j], pair_lam);
    }
  }
  double dt = dt_max;
  for (int i = 0; i < g.n_dofs; ++i) {
    if (lam[i] <= 0.0) continue;
    const double bound = convention == DtConvention::Theorem
                             ? st.h_min[i] / (2.0 * lam[i] * st.kappa[i])
                             : st.h_min[i] / lam[i];
    dt = std::min(dt, cfl * bound);
  }
  return dt;
}

StepResult ssp_rk3_step(const SolverState& s0, const AleStrategy& ale, double dt,
                        const SystemDescriptor& sys, const BcTable& bc,
                        const QuadratureRule& rule, std::shared_ptr<const DofGraph> graph,
                        const StepOptions& opt, const StencilField* stage0_stencil) {
  StepResult out;
  out.report.dt = dt;
  out.report.total_before = column_total(s0.mass, s0.U);

  auto substep = [&](const SolverState& s, double t_velocity) -> StepResult {
    const VelocityField W = node_velocities(ale, s.mesh, *graph, s.U, sys, t_velocity, dt);
    const StencilField local = (stage0_stencil && &s == &s0)
                                   ? StencilField{}  // unused marker
                                   : assemble_stencil(s.mesh, rule, graph);
    const StencilField& st = (stage0_stencil && &s == &s0) ? *stage0_stencil : local;
    return euler_step_v1(s, W, dt, st, sys, bc, opt);
  };

  StepResult r1 = substep(s0, s0.t);
  if (!r1.accepted) {
    out.reject_reason = "stage 1: " + r1.reject_reason;
    return out;
  }

  StepResult r2 = substep(r1.state, s0.t + dt);
  if (!r2.accepted) {
    out.reject_reason = "stage 2: " + r2.reject_reason;
    return out;
  }
  SolverState s2 = std::move(r2.state);
  s2.mesh.pos = 0.75 * s0.mesh.pos + 0.25 * s2.mesh.pos;
  s2.mass = 0.75 * s0.mass + 0.25 * r2.mass_next;
  for (int i = 0; i < s2.U.rows(); ++i)
    s2.U.row(i) = (0.75 * s0.mass[i] * s0.U.row(i) + 0.25 * r2.mass_next[i] * s2.U.row(i)) /
                  s2.mass[i];
  s2.t = s0.t + 0.5 * dt;
  s2.mesh.time = s2.t;
  apply_bc(s2, bc, s2.t);

  StepResult r3 = substep(s2, s0.t + 0.5 * dt);
  if (!r3.accepted) {
    out.reject_reason = "stage 3: " + r3.reject_reason;
    return out;
  }
  SolverState s3 = std::move(r3.state);
  s3.mesh.pos = (1.0 / 3.0) * s0.mesh.pos + (2.0 / 3.0) * s3.mesh.pos;
  s3.mass = (1.0 / 3.0) * s0.mass + (2.0 / 3.0) * r3.mass_next;
  for (int i = 0; i < s3.U.rows(); ++i)
    s3.U.row(i) = ((1.0 / 3.0) * s0.mass[i] * s0.U.row(i) +
                   (2.0 / 3.0) * r3.mass_next[i] * s3.U.row(i)) /
                  s3.mass[i];
  s3.t = s0.t + dt;
  s3.mesh.time = s3.t;
  s3.step = s0.step + 1;
  apply_bc(s3, bc, s3.t);

  out.accepted = true;
  out.state = std::move(s3);
  out.mass_next = out.state.mass;
  out.d = std::move(r1.d);
  out.report.min_convexity = std::min({r1.report.min_convexity, r2.report.min_convexity,
                                       r3.report.min_convexity});
  out.report.max_rowsum_defect = std::max({r1.report.max_rowsum_defect,
                                           r2.report.max_rowsum_defect,
                                           r3.report.max_rowsum_defect});
  out.report.total_after = column_total(out.state.mass, out.state.U);
  return out;
}

StateField nonconservative_update(const SolverState& s, const VelocityField& W, double dt,
                                  const StencilField& st, const std::vector<double>& d,
                                  const SystemDescriptor& sys) {
  const DofGraph& g = *st.graph;
  const int m = sys.m;
  Eigen::VectorXd mass_next = s.mass;
  for (int i = 0; i < g.n_dofs; ++i) {
    double flow = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      flow += W.row(g.col[k]).dot(st.c[k]);
    mass_next[i] += dt * flow;
  }

  std::vector<FluxMat> F(g.n_dofs);
  State Uj(m);
  for (int j = 0; j < g.n_dofs; ++j) {
    Uj = s.U.row(j).transpose();
    F[j] = sys.flux(Uj, s.mesh.pos.row(j).transpose(), s.t);
  }
  StateField U_next(g.n_dofs, m);
  State acc(m);
  for (int i = 0; i < g.n_dofs; ++i) {
    acc.setZero();
    const State Ui = s.U.row(i).transpose();
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      const double wc = W.row(j).dot(st.c[k]);
      acc += wc * (s.U.row(j).transpose() - Ui) - F[j] * st.c[k] +
             d[k] * s.U.row(j).transpose();
    }
    U_next.row(i) = (Ui + dt / mass_next[i] * acc).transpose();
  }
  return U_next;
}

Eigen::VectorXd entropy_residual(const SolverState& before, const SolverState& after,
                                 const StencilField& st, const std::vector<double>& d,
                                 const VelocityField& W, const SystemDescriptor& sys,
                                 const EntropyPair& pair) {
  const DofGraph& g = *st.graph;
  const double dt = after.t - before.t;
  Eigen::VectorXd residual(g.n_dofs);
  std::vector<double> eta(g.n_dofs);
  std::vector<Vec2> q(g.n_dofs);
  State Uj(sys.m);
  for (int j = 0; j < g.n_dofs; ++j) {
    Uj = before.U.row(j).transpose();
    const Vec2 xj = before.mesh.pos.row(j).transpose();
    eta[j] = pair.eta(Uj, xj, before.t);
    q[j] = pair.flux(Uj, xj, before.t);
  }
  State Ua(sys.m);
  for (int i = 0; i < g.n_dofs; ++i) {
    Ua = after.U.row(i).transpose();
    const double eta_after = pair.eta(Ua, after.mesh.pos.row(i).transpose(), after.t);
    double r = (after.mass[i] * eta_after - before.mass[i] * eta[i]) / dt;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      r += (q[j] - eta[j] * W.row(j).transpose()).dot(st.c[k]) + d[k] * eta[j];
    }
    residual[i] = r;
  }
  return residual;
}

AdvanceResult advance(const SolverState& state, const AleStrategy& ale,
                      const SystemDescriptor& sys, const BcTable& bc,
                      const AdvanceConfig& config, const QuadratureRule& rule,
                      std::shared_ptr<const DofGraph> graph, double t_end,
                      const VelocityField* W_hint) {
  const StencilField stencil = assemble_stencil(state.mesh, rule, graph);
  const VelocityField W0 = W_hint && W_hint->rows() == state.mesh.n_dofs()
                               ? *W_hint
                               : VelocityField::Zero(state.mesh.n_dofs(), 2);

  double dt = estimate_dt(state, stencil, W0, sys, config.cfl, config.dt_max,
                          config.dt_convention);
  dt = std::min(dt, t_end - state.t);
  if (!(dt > 0.0)) throw NumericError("advance called with no time left");

  const TimeQuadrature tq = TimeQuadrature::midpoint();
  std::string last_reason;
  for (int halving = 0; halving <= config.max_halvings; ++halving, dt *= 0.5) {
    const VelocityField W =
        node_velocities(ale, state.mesh, *graph, state.U, sys, state.t, dt);
    const InvertibilityReport inv = check_invertibility(state.mesh, W, dt, rule);
    if (!inv.ok) {
      last_reason = "mesh motion not invertible (" + std::to_string(inv.bad_cells.size()) +
                    " cells)";
      continue;
    }
    StepResult r;
    if (config.integrator == Integrator::SspRk3) {
      if (config.scheme != SchemeVersion::V1)
        throw NumericError("SSP-RK3 is only available for scheme version 1");
      r = ssp_rk3_step(state, ale, dt, sys, bc, rule, graph, config.step, &stencil);
    } else if (config.scheme == SchemeVersion::V1) {
      r = euler_step_v1(state, W, dt, stencil, sys, bc, config.step);
    } else {
      r = euler_step_v2(state, W, dt, sys, bc, rule, tq, graph, config.step);
    }
    if (r.accepted) {
      AdvanceResult out;
      out.state = std::move(r.state);
      out.report = r.report;
      out.report.reductions = halving;
      out.W = W;
      out.dt = dt;
      out.d = std::move(r.d);
      return out;
    }
    last_reason = r.reject_reason;
  }
  throw NumericError("step rejected after " + std::to_string(config.max_halvings) +
                     " halvings at t=" + std::to_string(state.t) + ": " + last_reason);
}

}  // namespace aleidp
