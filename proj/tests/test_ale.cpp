#include <doctest.h>

#include <cmath>
#include <random>

#include "aleidp/ale_motion.hpp"
#include "aleidp/stencil.hpp"

using namespace aleidp;

namespace {

StateField constant_field(int n, double v) {
  StateField U(n, 1);
  U.col(0).setConstant(v);
  return U;
}

}  // namespace

TEST_CASE("node velocities: none, lagrangian, pure smoothing") {
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 3, 3);
  const DofGraph graph = build_dof_graph(mesh);
  auto burgers = make_burgers_2d();

  const StateField U = constant_field(mesh.n_dofs(), 1.0);
  const VelocityField none =
      node_velocities(AleStrategy::none(), mesh, graph, U, burgers, 0.0, 0.1);
  CHECK(none.cwiseAbs().maxCoeff() == 0.0);

  AleStrategy lag = AleStrategy::lagrangian();
  for (int bit : {boundary::left, boundary::right, boundary::bottom, boundary::top})
    lag.boundary[bit] = {BoundaryMotion::Free, nullptr};
  const VelocityField W = node_velocities(lag, mesh, graph, U, burgers, 0.0, 0.1);
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    CHECK(W(i, 0) == doctest::Approx(1.0));  // grad_u (u^2/2 beta) = u beta
    CHECK(W(i, 1) == doctest::Approx(1.0));
  }
}

TEST_CASE("1D three-node chain: one pure smoothing sweep averages neighbors") {
  Mesh mesh = make_segment_mesh(0.0, 1.0, 2);
  mesh.pos(1, 0) = 0.4;
  const DofGraph graph = build_dof_graph(mesh);
  auto transport = make_transport([](const Vec2&, double) { return Vec2(0.0, 0.0); });

  AleStrategy strat = AleStrategy::smoothed_lagrangian(0.0, 1);  // omega 0, L 1
  const double dt = 0.05;
  const StateField U = constant_field(3, 0.0);
  const VelocityField W = node_velocities(strat, mesh, graph, U, transport, 0.0, dt);
  // lagrangian velocity is zero, so the smoothed midpoint is (0 + 1)/2
  CHECK(W(1, 0) == doctest::Approx(0.1 / dt));
  CHECK(W(0, 0) == 0.0);
  CHECK(W(2, 0) == 0.0);

  CHECK_THROWS_AS(node_velocities(strat, mesh, graph, U, transport, 0.0, 0.0),
                  NumericError);
}

TEST_CASE("omega = 1 and L = 0 reproduce the pure Lagrangian motion") {
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> jig(-0.03, 0.03);
  for (int i = 0; i < mesh.n_dofs(); ++i)
    if (mesh.dof_tag[i] == boundary::interior) {
      mesh.pos(i, 0) += jig(rng);
      mesh.pos(i, 1) += jig(rng);
    }
  const DofGraph graph = build_dof_graph(mesh);
  auto burgers = make_burgers_2d();
  StateField U(mesh.n_dofs(), 1);
  for (int i = 0; i < mesh.n_dofs(); ++i) U(i, 0) = std::sin(3.0 * mesh.pos(i, 0));

  const VelocityField lag =
      node_velocities(AleStrategy::lagrangian(), mesh, graph, U, burgers, 0.0, 0.1);
  const VelocityField w_omega1 = node_velocities(AleStrategy::smoothed_lagrangian(1.0, 3),
                                                 mesh, graph, U, burgers, 0.0, 0.1);
  const VelocityField w_l0 = node_velocities(AleStrategy::smoothed_lagrangian(0.4, 0),
                                             mesh, graph, U, burgers, 0.0, 0.1);
  CHECK((w_omega1 - lag).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((w_l0 - lag).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("smoothing keeps nodes in the convex hull of the Lagrangian positions") {
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 5, 5);
  const DofGraph graph = build_dof_graph(mesh);
  auto burgers = make_burgers_2d();
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  StateField U(mesh.n_dofs(), 1);
  for (int i = 0; i < mesh.n_dofs(); ++i) U(i, 0) = val(rng);

  const double dt = 0.02;
  const VelocityField lag =
      node_velocities(AleStrategy::lagrangian(), mesh, graph, U, burgers, 0.0, dt);
  const VelocityField smooth = node_velocities(AleStrategy::smoothed_lagrangian(0.3, 2),
                                               mesh, graph, U, burgers, 0.0, dt);
  VelocityField a_lag = mesh.pos + dt * lag;
  // boundary dofs are policy-fixed in both fields
  double lo_x = a_lag.col(0).minCoeff(), hi_x = a_lag.col(0).maxCoeff();
  double lo_y = a_lag.col(1).minCoeff(), hi_y = a_lag.col(1).maxCoeff();
  lo_x = std::min(lo_x, mesh.pos.col(0).minCoeff());
  hi_x = std::max(hi_x, mesh.pos.col(0).maxCoeff());
  lo_y = std::min(lo_y, mesh.pos.col(1).minCoeff());
  hi_y = std::max(hi_y, mesh.pos.col(1).maxCoeff());
  const VelocityField moved = mesh.pos + dt * smooth;
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    CHECK(moved(i, 0) >= lo_x - 1e-14);
    CHECK(moved(i, 0) <= hi_x + 1e-14);
    CHECK(moved(i, 1) >= lo_y - 1e-14);
    CHECK(moved(i, 1) <= hi_y + 1e-14);
  }
}

TEST_CASE("boundary policies: fixed never moves, slide is tangential, prescribed wins") {
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 4, 4);
  const DofGraph graph = build_dof_graph(mesh);
  auto burgers = make_burgers_2d();
  const StateField U = constant_field(mesh.n_dofs(), 2.0);

  AleStrategy strat = AleStrategy::smoothed_lagrangian(0.9, 2);
  strat.boundary[boundary::left] = {BoundaryMotion::Fixed, nullptr};
  strat.boundary[boundary::right] = {BoundaryMotion::Fixed, nullptr};
  strat.boundary[boundary::bottom] = {BoundaryMotion::Slide, nullptr};
  strat.boundary[boundary::top] = {BoundaryMotion::Prescribed,
                                   [](const Vec2&, double) { return Vec2(0.0, -1.0); }};
  const VelocityField W = node_velocities(strat, mesh, graph, U, burgers, 0.0, 0.01);
  for (int i = 0; i < mesh.n_dofs(); ++i) {
    const int tag = mesh.dof_tag[i];
    if (tag & boundary::left || tag & boundary::right) {
      CHECK(W.row(i).norm() == 0.0);  // fixed dofs never move (corners: left/right win)
    } else if (tag & boundary::bottom) {
      CHECK(W(i, 0) == doctest::Approx(2.0));  // tangential Lagrangian component
      CHECK(W(i, 1) == 0.0);
    } else if (tag & boundary::top) {
      CHECK(W(i, 0) == 0.0);
      CHECK(W(i, 1) == doctest::Approx(-1.0));
    }
  }
}

TEST_CASE("invertibility check: valid motions pass, node crossings are reported") {
  Mesh mesh = make_box_mesh(CellKind::Quad, Vec2(0, 0), Vec2(1, 1), 3, 3);
  const auto rule = QuadratureRule::assembly(mesh.kind);
  VelocityField zero = VelocityField::Zero(mesh.n_dofs(), 2);
  CHECK(check_invertibility(mesh, zero, 0.5, rule).ok);

  VelocityField rigid = zero;
  rigid.col(0).setConstant(3.0);
  CHECK(check_invertibility(mesh, rigid, 10.0, rule).ok);

  Mesh line = make_segment_mesh(0.0, 2.0, 2);
  VelocityField collapse = VelocityField::Zero(3, 2);
  collapse(1, 0) = -1.0;
  const auto report = check_invertibility(line, collapse, 1.5, QuadratureRule::assembly(line.kind));
  CHECK(!report.ok);
  CHECK(report.bad_cells.size() >= 1);
  CHECK(report.bad_cells[0] == 0);
}
