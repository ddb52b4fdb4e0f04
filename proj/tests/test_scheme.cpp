#include <doctest.h>

#include <cmath>
#include <random>

#include "aleidp/euler.hpp"
#include "aleidp/solver.hpp"

using namespace aleidp;

namespace {

struct Setup {
  Mesh mesh;
  std::shared_ptr<const DofGraph> graph;
  QuadratureRule rule;
  StencilField stencil;
  SolverState state;
};

Setup make_setup(Mesh mesh, const SystemDescriptor& sys,
                 const std::function<State(const Vec2&)>& init) {
  Setup s{std::move(mesh), nullptr, QuadratureRule::assembly(CellKind::Quad), {}, {}};
  s.rule = QuadratureRule::assembly(s.mesh.kind);
  s.graph = std::make_shared<const DofGraph>(build_dof_graph(s.mesh));
  s.stencil = assemble_stencil(s.mesh, s.rule, s.graph);
  s.state.mesh = s.mesh;
  s.state.U.resize(s.mesh.n_dofs(), sys.m);
  for (int i = 0; i < s.mesh.n_dofs(); ++i)
    s.state.U.row(i) = init(s.mesh.pos.row(i).transpose()).transpose();
  s.state.mass = exact_masses(s.mesh, s.rule);
  return s;
}

State scalar(double v) {
  State s(1);
  s[0] = v;
  return s;
}

}  // namespace

TEST_CASE("compute_dij: constant advection, zero field, Burgers hand value") {
  auto advect = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  Setup s = make_setup(make_segment_mesh(0.0, 1.0, 6, true), advect,
                       [](const Vec2&) { return scalar(1.0); });
  const VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);
  const auto d = compute_dij(s.stencil, s.state.U, W, advect, s.mesh, 0.0);
  const DofGraph& g = *s.graph;
  for (int i = 0; i < g.n_dofs; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      if (g.col[k] == i) continue;
      CHECK(d[k] == doctest::Approx(s.stencil.c[k].norm()).epsilon(1e-13));
    }

  auto still = make_transport([](const Vec2&, double) { return Vec2(0.0, 0.0); });
  const auto d0 = compute_dij(s.stencil, s.state.U, W, still, s.mesh, 0.0);
  for (double v : d0) CHECK(v == 0.0);

  // Burgers data 1/0 across a 1D pair with c = (1/2, 0)
  auto burgers = make_burgers_2d();
  Setup b = make_setup(make_segment_mesh(0.0, 1.0, 4), burgers, [](const Vec2& x) {
    return scalar(x[0] < 0.5 ? 1.0 : 0.0);
  });
  const VelocityField Wb = VelocityField::Zero(b.mesh.n_dofs(), 2);
  const auto db = compute_dij(b.stencil, b.state.U, Wb, burgers, b.mesh, 0.0);
  const int k = b.graph->find(1, 2);  // U = 1 at node 1 (x=0.25), 0 at node 2 (x=0.5)
  REQUIRE(b.state.U(1, 0) == 1.0);
  REQUIRE(b.state.U(2, 0) == 0.0);
  CHECK(db[k] == doctest::Approx(0.5).epsilon(1e-13));

  // diagonal carries the negative row sum
  for (int i = 0; i < b.graph->n_dofs; ++i) {
    double sum = 0.0;
    for (int kk = b.graph->row_ptr[i]; kk < b.graph->row_ptr[i + 1]; ++kk) sum += db[kk];
    CHECK(std::abs(sum) <= 1e-15);
  }
}

TEST_CASE("estimate_dt: zero speeds, 1D hand value, cfl linearity") {
  auto still = make_transport([](const Vec2&, double) { return Vec2(0.0, 0.0); });
  Setup s = make_setup(make_segment_mesh(0.0, 1.0, 8), still,
                       [](const Vec2&) { return scalar(1.0); });
  const VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);
  CHECK(estimate_dt(s.state, s.stencil, W, still, 1.0, 7.5) == 7.5);

  auto advect = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  const double h = 1.0 / 8.0;
  const double dt = estimate_dt(s.state, s.stencil, W, advect, 1.0);
  CHECK(dt == doctest::Approx(0.5 * h).epsilon(1e-13));
  CHECK(estimate_dt(s.state, s.stencil, W, advect, 0.5) ==
        doctest::Approx(0.5 * dt).epsilon(1e-14));
}

TEST_CASE("v1 step: DGCL for constant states under arbitrary motion") {
  auto burgers = make_burgers_2d();
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 5, 5),
                       burgers, [](const Vec2&) { return scalar(0.7); });
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  VelocityField W(s.mesh.n_dofs(), 2);
  for (int i = 0; i < s.mesh.n_dofs(); ++i) W.row(i) = Vec2(u(rng), u(rng)).transpose();
  const double dt = 0.02;
  REQUIRE(check_invertibility(s.mesh, W, dt, s.rule).ok);
  const StepResult r = euler_step_v1(s.state, W, dt, s.stencil, burgers, BcTable::none());
  REQUIRE(r.accepted);
  CHECK((r.state.U.array() - 0.7).abs().maxCoeff() <= 1e-14);
  CHECK(r.report.min_convexity >= 0.0);
}

TEST_CASE("v1 step: periodic transport conserves the total") {
  auto advect = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  Setup s = make_setup(make_segment_mesh(0.0, 1.0, 16, true), advect, [](const Vec2& x) {
    return scalar(0.5 + 0.4 * std::sin(2 * M_PI * x[0]));
  });
  const VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);
  SolverState state = s.state;
  const double total0 = (state.mass.array() * state.U.col(0).array()).sum();
  for (int n = 0; n < 20; ++n) {
    const double dt = estimate_dt(state, s.stencil, W, advect, 0.9);
    const StepResult r = euler_step_v1(state, W, dt, s.stencil, advect, BcTable::none());
    REQUIRE(r.accepted);
    state = r.state;
    const double total = (state.mass.array() * state.U.col(0).array()).sum();
    CHECK(std::abs(total - total0) <= 1e-13 * std::abs(total0));
    // stationary mesh: mass field is unchanged
    CHECK((state.mass - s.state.mass).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("v1 single step on Sod data: bounds and convex-combination certificate") {
  auto euler = make_euler(1.4);
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 20, 4),
                       euler, [](const Vec2& x) {
                         return euler_conserved({1.0, Vec2::Zero(),
                                                 x[0] <= 0.5 ? 1.0 : 0.1},
                                                1.4);
                       });
  const VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);
  const double dt = estimate_dt(s.state, s.stencil, W, euler, 1.0);
  const StepResult r = euler_step_v1(s.state, W, dt, s.stencil, euler, BcTable::none());
  REQUIRE(r.accepted);

  for (int i = 0; i < s.mesh.n_dofs(); ++i) {
    CHECK(r.state.U(i, 0) >= 0.125 - 1e-12);
    CHECK(r.state.U(i, 0) <= 1.0 + 1e-12);
    const State Ui = r.state.U.row(i).transpose();
    CHECK(euler_internal_energy(Ui) > 0.0);
  }

  // reconstruct the update as the convex combination of bar states
  const DofGraph& g = *s.graph;
  for (int i = 0; i < g.n_dofs; ++i) {
    const State Ui = s.state.U.row(i).transpose();
    State recon = State::Zero(4);
    double coeff_sum = 0.0;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      if (j == i || r.d[k] == 0.0) continue;
      const State Uj = s.state.U.row(j).transpose();
      const Vec2 cij = s.stencil.c[k];
      const Vec2 nij = cij / cij.norm();
      const FluxMat fi = euler.flux(Ui, Vec2::Zero(), 0.0);
      const FluxMat fj = euler.flux(Uj, Vec2::Zero(), 0.0);
      const State bar = (fi - fj) * nij * (cij.norm() / (2.0 * r.d[k])) +
                        0.5 * (Ui + Uj);
      const double coeff = 2.0 * r.d[k] * dt / r.mass_next[i];
      recon += coeff * bar;
      coeff_sum += coeff;
      // bar states are Riemann-fan averages: admissible
      CHECK(bar[0] > 0.0);
      CHECK(euler_internal_energy(bar) > 0.0);
    }
    recon += (1.0 - coeff_sum) * Ui;
    CHECK(coeff_sum <= 1.0 + 1e-13);
    CHECK((recon - r.state.U.row(i).transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("v2 step: W = 0 coincides with v1; constants preserved; translation identity") {
  auto burgers = make_burgers_2d();
  Setup s = make_setup(make_box_mesh(CellKind::Triangle, Vec2(0, 0), Vec2(1, 1), 4, 4),
                       burgers, [](const Vec2& x) {
                         return scalar(0.3 + 0.5 * std::sin(2 * M_PI * x[0]) *
                                                 std::sin(2 * M_PI * x[1]));
                       });
  const VelocityField W0 = VelocityField::Zero(s.mesh.n_dofs(), 2);
  const double dt = 0.2 * estimate_dt(s.state, s.stencil, W0, burgers, 1.0);
  const StepResult r1 = euler_step_v1(s.state, W0, dt, s.stencil, burgers, BcTable::none());
  const StepResult r2 = euler_step_v2(s.state, W0, dt, burgers, BcTable::none(), s.rule,
                                      TimeQuadrature::midpoint(), s.graph);
  REQUIRE(r1.accepted);
  REQUIRE(r2.accepted);
  CHECK((r1.state.U - r2.state.U).cwiseAbs().maxCoeff() <= 1e-13);

  // constant state under random motion
  Setup c = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4),
                       burgers, [](const Vec2&) { return scalar(-0.3); });
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  VelocityField W(c.mesh.n_dofs(), 2);
  for (int i = 0; i < c.mesh.n_dofs(); ++i) W.row(i) = Vec2(u(rng), u(rng)).transpose();
  const StepResult rc = euler_step_v2(c.state, W, 0.05, burgers, BcTable::none(), c.rule,
                                      TimeQuadrature::midpoint(), c.graph);
  REQUIRE(rc.accepted);
  CHECK((rc.state.U.array() + 0.3).abs().maxCoeff() <= 1e-14);

  // rigid translation in the Lagrangian frame of constant advection
  auto advect = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  Setup t = make_setup(make_segment_mesh(0.0, 1.0, 2), advect, [](const Vec2& x) {
    return scalar(std::cos(3.0 * x[0]));
  });
  VelocityField Wt = VelocityField::Zero(3, 2);
  Wt.col(0).setConstant(1.0);
  const StepResult rt = euler_step_v2(t.state, Wt, 0.07, advect, BcTable::none(), t.rule,
                                      TimeQuadrature::midpoint(), t.graph);
  REQUIRE(rt.accepted);
  CHECK((rt.state.U - t.state.U).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((rt.state.mass - t.state.mass).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("step rejection: mass positivity and convexity gate acceptance") {
  auto advect = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  Setup s = make_setup(make_segment_mesh(0.0, 1.0, 4), advect,
                       [](const Vec2& x) { return scalar(x[0]); });
  // collapse the support of an interior dof: mass goes negative
  VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);
  W(1, 0) = 2.0;
  W(2, 0) = -2.0;
  const StepResult r = euler_step_v1(s.state, W, 0.2, s.stencil, advect, BcTable::none());
  CHECK(!r.accepted);
  CHECK(r.reject_reason.find("mass") != std::string::npos);

  // too-large dt trips the convexity certificate
  const VelocityField W0 = VelocityField::Zero(s.mesh.n_dofs(), 2);
  const double dt_big = 4.0 * estimate_dt(s.state, s.stencil, W0, advect, 1.0);
  const StepResult r2 = euler_step_v1(s.state, W0, dt_big, s.stencil, advect, BcTable::none());
  CHECK(!r2.accepted);
  CHECK(r2.reject_reason.find("convexity") != std::string::npos);
}

TEST_CASE("ssp-rk3: constants are fixed points and the mass weights are convex") {
  auto burgers = make_burgers_2d();
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4),
                       burgers, [](const Vec2&) { return scalar(0.45); });
  AleStrategy ale = AleStrategy::analytic([](const Vec2& x, double t) {
    return Vec2(0.2 * std::sin(2.0 * x[0] + t), -0.15 * std::cos(1.3 * x[1]));
  });
  const StepResult r = ssp_rk3_step(s.state, ale, 0.05, burgers, BcTable::none(), s.rule,
                                    s.graph);
  REQUIRE(r.accepted);
  CHECK((r.state.U.array() - 0.45).abs().maxCoeff() <= 1e-14);

  // stage-2 mass identity: 3/4 m0/m2 + 1/4 m2~/m2 = 1
  const VelocityField W0 =
      node_velocities(ale, s.mesh, *s.graph, s.state.U, burgers, 0.0, 0.05);
  const StepResult r1 = euler_step_v1(s.state, W0, 0.05, s.stencil, burgers, BcTable::none());
  REQUIRE(r1.accepted);
  const VelocityField W1 = node_velocities(ale, r1.state.mesh, *s.graph, r1.state.U,
                                           burgers, 0.05, 0.05);
  const StencilField st1 = assemble_stencil(r1.state.mesh, s.rule, s.graph);
  const StepResult r2 = euler_step_v1(r1.state, W1, 0.05, st1, burgers, BcTable::none());
  REQUIRE(r2.accepted);
  for (int i = 0; i < s.mesh.n_dofs(); ++i) {
    const double m2 = 0.75 * s.state.mass[i] + 0.25 * r2.mass_next[i];
    CHECK(0.75 * s.state.mass[i] / m2 + 0.25 * r2.mass_next[i] / m2 ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("nonconservative form matches the conservative update") {
  auto kpp = make_kpp();
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 5, 5, true, true),
                       kpp, [](const Vec2& x) {
                         return scalar(0.25 * M_PI + 3.25 * M_PI *
                                                         (x - Vec2(0.5, 0.5)).norm());
                       });
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  VelocityField W(s.mesh.n_dofs(), 2);
  for (int i = 0; i < s.mesh.n_dofs(); ++i) W.row(i) = Vec2(u(rng), u(rng)).transpose();

  const double dt = 0.5 * estimate_dt(s.state, s.stencil, W, kpp, 1.0);
  const auto d = compute_dij(s.stencil, s.state.U, W, kpp, s.mesh, 0.0);
  const StepResult r = euler_step_v1(s.state, W, dt, s.stencil, kpp, BcTable::none());
  REQUIRE(r.accepted);
  const StateField other = nonconservative_update(s.state, W, dt, s.stencil, d, kpp);
  CHECK((other - r.state.U).cwiseAbs().maxCoeff() <= 1e-12);

  // constant state: the non-conservative form is exactly stationary
  StateField Uc = s.state.U;
  Uc.col(0).setConstant(1.1);
  SolverState cs = s.state;
  cs.U = Uc;
  const auto dc = compute_dij(s.stencil, Uc, W, kpp, s.mesh, 0.0);
  const StateField same = nonconservative_update(cs, W, dt, s.stencil, dc, kpp);
  CHECK((same.array() - 1.1).abs().maxCoeff() <= 1e-14);

  // W = 0 reduces to the fixed-mesh form: masses stay put and the two forms agree
  const VelocityField W0 = VelocityField::Zero(s.mesh.n_dofs(), 2);
  const auto d0 = compute_dij(s.stencil, s.state.U, W0, kpp, s.mesh, 0.0);
  const StepResult r0 = euler_step_v1(s.state, W0, dt, s.stencil, kpp, BcTable::none());
  REQUIRE(r0.accepted);
  CHECK((nonconservative_update(s.state, W0, dt, s.stencil, d0, kpp) - r0.state.U)
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("entropy residual: zero for constants, nonpositive, sign stable under dt/2") {
  auto burgers = make_burgers_2d();
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 5, 5, true, true),
                       burgers, [](const Vec2& x) {
                         return scalar(0.4 + 0.5 * std::sin(2 * M_PI * x[0]) *
                                                 std::cos(2 * M_PI * x[1]));
                       });
  const auto& pair = entropy_pair(burgers, "square");
  const VelocityField W = VelocityField::Zero(s.mesh.n_dofs(), 2);

  SolverState cs = s.state;
  cs.U.col(0).setConstant(0.8);
  const auto dc = compute_dij(s.stencil, cs.U, W, burgers, s.mesh, 0.0);
  const StepResult rc = euler_step_v1(cs, W, 0.01, s.stencil, burgers, BcTable::none());
  REQUIRE(rc.accepted);
  const auto res_const = entropy_residual(cs, rc.state, s.stencil, rc.d, W, burgers, pair);
  CHECK(res_const.cwiseAbs().maxCoeff() <= 1e-13);

  for (const double scale : {1.0, 0.5}) {
    const double dt = scale * estimate_dt(s.state, s.stencil, W, burgers, 0.9);
    const StepResult r = euler_step_v1(s.state, W, dt, s.stencil, burgers, BcTable::none());
    REQUIRE(r.accepted);
    const auto res = entropy_residual(s.state, r.state, s.stencil, r.d, W, burgers, pair);
    CHECK(res.maxCoeff() <= 1e-12);
  }
}

TEST_CASE("apply_bc: dirichlet overwrites tagged dofs, interior untouched") {
  auto euler = make_euler(1.4);
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4),
                       euler, [](const Vec2&) {
                         return euler_conserved({0.5, Vec2(0.1, 0.0), 0.7}, 1.4);
                       });
  BcTable bc;
  bc.set_dirichlet(boundary::left, [](const Vec2&, double t) {
    return euler_conserved({2.0, Vec2(t, 0.0), 3.0}, 1.4);
  });
  SolverState state = s.state;
  apply_bc(state, bc, 0.25);
  for (int i = 0; i < s.mesh.n_dofs(); ++i) {
    if (s.mesh.dof_tag[i] & boundary::left) {
      CHECK(state.U(i, 0) == doctest::Approx(2.0));
      CHECK(state.U(i, 1) == doctest::Approx(2.0 * 0.25));
    } else {
      CHECK(state.U(i, 0) == doctest::Approx(0.5));
    }
  }
}

TEST_CASE("advance: halving protocol recovers from aggressive dt") {
  auto burgers = make_burgers_2d();
  Setup s = make_setup(make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4),
                       burgers, [](const Vec2& x) {
                         return scalar(x[0] < 0.5 ? 1.0 : 0.0);
                       });
  AdvanceConfig cfg;
  cfg.cfl = 1.0;
  cfg.dt_max = 0.9;  // far beyond the certificate; rejection path must engage
  cfg.dt_convention = DtConvention::Theorem;
  AleStrategy ale = AleStrategy::smoothed_lagrangian(0.9, 2);
  const AdvanceResult r = advance(s.state, ale, burgers, BcTable::none(), cfg, s.rule,
                                  s.graph, 10.0);
  CHECK(r.report.min_convexity >= 0.0);
  CHECK(r.state.t > 0.0);
}
