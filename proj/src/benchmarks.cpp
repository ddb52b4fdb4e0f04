#include "aleidp/benchmarks.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <thread>

#include "aleidp/exact_solutions.hpp"
#include "aleidp/io.hpp"

namespace aleidp {

namespace {

std::function<Mesh(int, CellKind)> square_family(Vec2 lo, Vec2 hi, int base_cells) {
  return [=](int level, CellKind fem) {
    const int n = base_cells << level;
    return make_box_mesh(fem, lo, hi, n, n);
  };
}

State scalar_state(double v) {
  State s(1);
  s[0] = v;
  return s;
}

BenchmarkSpec make_rotation() {
  BenchmarkSpec spec;
  spec.name = "rotation";
  spec.system = make_transport(rotation_velocity);
  spec.mesh_family = square_family(Vec2(0, 0), Vec2(1, 1), 8);
  spec.initial = [](const Vec2& x) { return scalar_state(x[0] + x[1]); };
  spec.ale = AleStrategy::analytic(rotation_velocity);
  // the swirl is tangent to the box; every side follows its own motion
  for (int bit : {boundary::left, boundary::right, boundary::bottom, boundary::top})
    spec.ale.boundary[bit] = {BoundaryMotion::Free, nullptr};
  spec.final_time = 0.5;
  spec.cfl = 1.0;
  spec.exact = [](const Vec2& x, double t) { return exact_rotation(x, t, 1e-10); };
  // the frozen-coefficient flux of the space-time field sits outside the
  // local-invariance theory; no bounds assertion on this benchmark
  spec.check_invariants = false;
  return spec;
}

BenchmarkSpec make_burgers() {
  BenchmarkSpec spec;
  spec.name = "burgers2d";
  spec.system = make_burgers_2d();
  spec.mesh_family = square_family(Vec2(-0.25, -0.25), Vec2(1.75, 1.75), 8);
  spec.initial = [](const Vec2& x) {
    const bool in_square = x[0] >= 0.0 && x[0] <= 1.0 && x[1] >= 0.0 && x[1] <= 1.0;
    return scalar_state(in_square ? 1.0 : 0.0);
  };
  spec.ale = AleStrategy::smoothed_lagrangian(0.9, 2);
  spec.final_time = 1.0;
  spec.cfl = 0.1;
  spec.exact = [](const Vec2& x, double t) { return exact_burgers(x, t); };
  return spec;
}

BenchmarkSpec make_kpp() {
  BenchmarkSpec spec;
  spec.name = "kpp";
  spec.system = aleidp::make_kpp();
  spec.mesh_family = [](int level, CellKind fem) {
    const int n = 32 << level;
    return make_box_mesh(fem, Vec2(-2.5, -2.0), Vec2(1.5, 2.5), n, n);
  };
  spec.initial = [](const Vec2& x) {
    return scalar_state(x.norm() < 1.0 ? 3.5 * M_PI : 0.25 * M_PI);
  };
  spec.ale = AleStrategy::smoothed_lagrangian(0.9, 2);
  // boundary values stay at the background state, so the free boundary
  // translates rigidly and the domain remains a rectangle
  for (int bit : {boundary::left, boundary::right, boundary::bottom, boundary::top})
    spec.ale.boundary[bit] = {BoundaryMotion::Free, nullptr};
  spec.final_time = 1.0;
  spec.cfl = 0.1;
  return spec;
}

BenchmarkSpec make_sod() {
  BenchmarkSpec spec;
  spec.name = "sod";
  spec.system = make_euler(1.4);
  spec.mesh_family = [](int level, CellKind fem) {
    const int nx = 20 << level;
    return make_box_mesh(fem, Vec2(0, 0), Vec2(1, 1), nx, 4);
  };
  spec.initial = [](const Vec2& x) {
    // dofs exactly on the interface take the left value
    const double p = x[0] <= 0.5 ? 1.0 : 0.1;
    return euler_conserved({1.0, Vec2::Zero(), p}, 1.4);
  };
  spec.bc.set_dirichlet(boundary::left, [](const Vec2&, double) {
    return euler_conserved({1.0, Vec2::Zero(), 1.0}, 1.4);
  });
  spec.bc.set_dirichlet(boundary::right, [](const Vec2&, double) {
    return euler_conserved({0.125, Vec2::Zero(), 0.1}, 1.4);
  });
  spec.ale = AleStrategy::smoothed_lagrangian(0.9, 2);
  spec.ale.boundary[boundary::left] = {BoundaryMotion::Fixed, nullptr};
  spec.ale.boundary[boundary::right] = {BoundaryMotion::Fixed, nullptr};
  spec.ale.boundary[boundary::bottom] = {BoundaryMotion::Slide, nullptr};
  spec.ale.boundary[boundary::top] = {BoundaryMotion::Slide, nullptr};
  spec.final_time = 0.2;
  spec.cfl = 0.1;
  spec.exact = [](const Vec2& x, double t) { return exact_sod(x[0], t).rho; };
  spec.refine_dims = 1;
  return spec;
}

BenchmarkSpec make_noh() {
  BenchmarkSpec spec;
  spec.name = "noh";
  const double gamma = 5.0 / 3.0;
  spec.system = make_euler(gamma);
  spec.mesh_family = [](int level, CellKind fem) {
    const int n = 30 << level;
    return make_box_mesh(fem, Vec2(-1, -1), Vec2(1, 1), n, n);
  };
  auto inward = [](const Vec2& x) {
    const double r = x.norm();
    return r > 0.0 ? Vec2(-x / r) : Vec2(Vec2::Zero());
  };
  spec.initial = [gamma, inward](const Vec2& x) {
    return euler_conserved({1.0, inward(x), 1e-15}, gamma);
  };
  spec.bc.set_dirichlet(boundary::any, [gamma, inward](const Vec2& x, double t) {
    const double r = x.norm();
    const double rho = r > t / 3.0 ? 1.0 + t / std::max(r, 1e-300) : 16.0;
    return euler_conserved({rho, inward(x), 1e-15}, gamma);
  });
  spec.ale = AleStrategy::smoothed_lagrangian(0.9, 2);
  for (int bit : {boundary::left, boundary::right, boundary::bottom, boundary::top})
    spec.ale.boundary[bit] = {BoundaryMotion::Prescribed,
                              [inward](const Vec2& x, double) { return inward(x); }};
  spec.final_time = 0.6;
  spec.cfl = 0.2;
  spec.exact = [](const Vec2& x, double t) { return exact_noh_density(x, t); };
  return spec;
}

}  // namespace

BenchmarkSpec benchmark(const std::string& name) {
  if (name == "rotation") return make_rotation();
  if (name == "burgers2d" || name == "burgers") return make_burgers();
  if (name == "kpp") return make_kpp();
  if (name == "sod") return make_sod();
  if (name == "noh") return make_noh();
  throw NumericError("unknown benchmark: " + name);
}

std::vector<std::string> benchmark_names() {
  return {"rotation", "burgers2d", "kpp", "sod", "noh"};
}

Mesh noh_quadrant_mesh() {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 32; ++i) xs.push_back(-1.0 + i / 32.0);
  for (int i = 1; i <= 64; ++i) xs.push_back(i / 64.0);
  ys = xs;
  return make_tensor_mesh(CellKind::Quad, xs, ys);
}

int thread_budget() {
  if (const char* env = std::getenv("ALE_IDP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

RunResult run_benchmark(const BenchmarkSpec& spec, int level, const RunOptions& opt) {
  Mesh mesh = spec.mesh_family(level, opt.fem);
  auto graph = std::make_shared<const DofGraph>(build_dof_graph(mesh));
  const QuadratureRule rule = QuadratureRule::assembly(mesh.kind);

  SolverState state;
  state.mesh = std::move(mesh);
  state.U.resize(state.mesh.n_dofs(), spec.system.m);
  for (int i = 0; i < state.mesh.n_dofs(); ++i)
    state.U.row(i) = spec.initial(state.mesh.pos.row(i).transpose()).transpose();
  state.mass = exact_masses(state.mesh, rule);

  AdvanceConfig config;
  config.scheme = opt.scheme.value_or(spec.scheme);
  config.integrator = opt.integrator.value_or(spec.integrator);
  config.cfl = opt.cfl.value_or(spec.cfl);
  config.dt_max = opt.dt_max;
  config.max_halvings = opt.max_halvings;
  config.dt_convention = spec.dt_convention;
  config.step.viscosity = !opt.no_viscosity;

  // initial bounds for the scalar invariant assertion
  double lo = 0.0, hi = 0.0;
  if (spec.system.scalar()) {
    lo = state.U.col(0).minCoeff();
    hi = state.U.col(0).maxCoeff();
  }
  const double slack = spec.system.scalar()
                           ? 1e-11 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))
                           : 0.0;
  const bool check_invariants = spec.check_invariants && !opt.no_viscosity;

  RunResult result;
  result.dofs = state.mesh.n_dofs();
  result.initial_total = State::Zero(spec.system.m);
  for (int i = 0; i < state.mesh.n_dofs(); ++i)
    result.initial_total += state.mass[i] * state.U.row(i).transpose();

  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    std::vector<std::string> names =
        spec.system.scalar() ? std::vector<std::string>{"u"}
                             : std::vector<std::string>{"rho", "mx", "my", "E"};
    write_vtk(opt.out_dir + "/field_initial.vtk", state.mesh, state.U, names);
  }

  const double T = spec.final_time;
  VelocityField W_hint;
  State Ui(spec.system.m);
  while (state.t < T - 1e-12 * std::max(1.0, T)) {
    AdvanceResult step = advance(state, spec.ale, spec.system, spec.bc, config, rule,
                                 graph, T, W_hint.rows() ? &W_hint : nullptr);
    state = std::move(step.state);
    W_hint = std::move(step.W);
    result.reductions += step.report.reductions;
    result.min_convexity = std::min(result.min_convexity, step.report.min_convexity);
    if (spec.conservation_check)
      result.max_conservation_defect =
          std::max(result.max_conservation_defect,
                   conservation_defect(step.report, result.initial_total));
    result.reports.push_back(step.report);
    ++result.steps;

    if (check_invariants) {
      for (int i = 0; i < state.mesh.n_dofs(); ++i) {
        if (spec.system.scalar()) {
          const double u = state.U(i, 0);
          if (u < lo - slack || u > hi + slack)
            throw InvariantViolation(spec.name + ": dof " + std::to_string(i) +
                                     " left [" + std::to_string(lo) + "," +
                                     std::to_string(hi) + "] at t=" +
                                     std::to_string(state.t) + " (u=" + std::to_string(u) +
                                     ")");
        } else {
          Ui = state.U.row(i).transpose();
          const double e = euler_internal_energy(Ui);
          if (!(Ui[0] > 0.0) || e <= -1e-16 * std::max(1.0, std::abs(Ui[3])))
            throw InvariantViolation(spec.name + ": negative density/energy at dof " +
                                     std::to_string(i) + ", t=" + std::to_string(state.t));
        }
      }
    }
    if (!opt.quiet && result.steps % 200 == 0)
      std::cerr << spec.name << " level " << level << ": t=" << state.t
                << " dt=" << step.dt << " steps=" << result.steps << "\n";
  }

  if (spec.exact) {
    const ErrorNorms norms = error_norms(state.mesh, state.U, spec.error_component,
                                         spec.exact, state.t,
                                         QuadratureRule::norms(state.mesh.kind));
    result.l1 = norms.l1;
    result.l2 = norms.l2;
  }

  if (!opt.out_dir.empty()) {
    std::vector<std::string> names =
        spec.system.scalar() ? std::vector<std::string>{"u"}
                             : std::vector<std::string>{"rho", "mx", "my", "E"};
    write_vtk(opt.out_dir + "/field_final.vtk", state.mesh, state.U, names);
    write_step_reports_csv(opt.out_dir + "/steps.csv", result.reports,
                           result.initial_total);
  }
  result.state = std::move(state);
  return result;
}

std::vector<ConvergenceRow> convergence_study(const BenchmarkSpec& spec,
                                              const std::vector<int>& levels,
                                              const RunOptions& opt) {
  std::vector<ConvergenceRow> rows(levels.size());
  const int budget = std::max(1, thread_budget());

  std::vector<std::future<RunResult>> jobs(levels.size());
  int in_flight = 0, next = 0, done = 0;
  std::vector<RunResult> results(levels.size());
  // simple sliding window so at most `budget` levels run at once
  while (done < static_cast<int>(levels.size())) {
    while (next < static_cast<int>(levels.size()) && in_flight < budget) {
      RunOptions level_opt = opt;
      if (!opt.out_dir.empty())
        level_opt.out_dir = opt.out_dir + "/level" + std::to_string(levels[next]);
      jobs[next] = std::async(std::launch::async, run_benchmark, std::cref(spec),
                              levels[next], level_opt);
      ++next;
      ++in_flight;
    }
    results[done] = jobs[done].get();
    --in_flight;
    ++done;
  }

  const double ratio = 2.0;  // refinement factor per level and dimension
  for (std::size_t k = 0; k < levels.size(); ++k) {
    rows[k].dofs = results[k].dofs;
    rows[k].l1 = results[k].l1;
    rows[k].l2 = results[k].l2;
    if (k > 0) {
      rows[k].l1_rate = std::log(rows[k - 1].l1 / rows[k].l1) / std::log(ratio);
      rows[k].l2_rate = std::log(rows[k - 1].l2 / rows[k].l2) / std::log(ratio);
    }
  }
  if (!opt.out_dir.empty())
    write_convergence_csv(opt.out_dir + "/table.csv", rows);
  return rows;
}

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRow>& rows) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "dofs,l1_error,l1_rate,l2_error,l2_rate\n";
  out << std::setprecision(10);
  for (const auto& row : rows)
    out << row.dofs << "," << row.l1 << "," << row.l1_rate << "," << row.l2 << ","
        << row.l2_rate << "\n";
}

}  // namespace aleidp
