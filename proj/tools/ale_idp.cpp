#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "aleidp/benchmarks.hpp"
#include "aleidp/io.hpp"
#include "aleidp/selfcheck.hpp"

namespace {

using namespace aleidp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolverFailure = 2;
constexpr int kExitInvariantViolation = 3;

struct CliSettings {
  std::string problem;
  int level = 0;
  std::vector<int> levels;
  std::string scheme;      // v1 | v2
  std::string integrator;  // euler | ssp3
  std::string fem = "q1";  // p1 | q1
  std::optional<double> cfl;
  bool no_viscosity = false;
  std::string out_dir;
  double dt_max = std::numeric_limits<double>::infinity();
  std::string config_path;
  // ALE overrides
  std::optional<std::string> ale_mode;
  std::optional<double> ale_omega;
  std::optional<int> ale_sweeps;
  std::map<std::string, std::string> bc_motion;  // side -> fixed|slide|free
  bool verbose = false;
};

// Config file keys mirror the flags; explicit flags win.
void apply_config(CliSettings& s, const std::set<std::string>& flags_set) {
  if (s.config_path.empty()) return;
  const auto entries = read_config(s.config_path);
  auto absent = [&](const std::string& flag) { return flags_set.count(flag) == 0; };
  for (const auto& [key, value] : entries) {
    if (key == "problem" && absent("problem")) s.problem = value;
    else if (key == "level" && absent("level")) s.level = std::stoi(value);
    else if (key == "scheme" && absent("scheme")) s.scheme = value;
    else if (key == "integrator" && absent("integrator")) s.integrator = value;
    else if (key == "fem" && absent("fem")) s.fem = value;
    else if (key == "cfl" && absent("cfl")) s.cfl = std::stod(value);
    else if (key == "no_viscosity" && absent("no-viscosity")) s.no_viscosity = value == "1" || value == "true";
    else if (key == "out" && absent("out")) s.out_dir = value;
    else if (key == "dt_max" && absent("dt-max")) s.dt_max = std::stod(value);
    else if (key == "ale.mode") { if (!s.ale_mode) s.ale_mode = value; }
    else if (key == "ale.omega") { if (!s.ale_omega) s.ale_omega = std::stod(value); }
    else if (key == "ale.sweeps") { if (!s.ale_sweeps) s.ale_sweeps = std::stoi(value); }
    else if (key.rfind("bc.", 0) == 0 && key.size() > 10 &&
             key.substr(key.size() - 7) == ".motion") {
      const std::string side = key.substr(3, key.size() - 10);
      if (!s.bc_motion.count(side)) s.bc_motion[side] = value;
    }
  }
}

int side_bit(const std::string& side) {
  if (side == "left") return boundary::left;
  if (side == "right") return boundary::right;
  if (side == "bottom") return boundary::bottom;
  if (side == "top") return boundary::top;
  if (side == "all") return boundary::any;
  throw NumericError("unknown boundary side: " + side);
}

void apply_overrides(BenchmarkSpec& spec, const CliSettings& s) {
  if (s.ale_mode) {
    const std::string& mode = *s.ale_mode;
    AleStrategy ale;
    ale.boundary = spec.ale.boundary;
    if (mode == "none") ale.mode = AleMode::None;
    else if (mode == "lagrangian") ale.mode = AleMode::Lagrangian;
    else if (mode == "smoothed" || mode == "smoothed_lagrangian") {
      ale.mode = AleMode::SmoothedLagrangian;
      ale.omega = spec.ale.omega;
      ale.sweeps = spec.ale.sweeps;
    } else if (mode == "analytic") {
      if (!spec.ale.analytic_velocity)
        throw NumericError("this problem has no analytic ALE velocity");
      ale = spec.ale;
    } else {
      throw NumericError("unknown ale.mode: " + mode);
    }
    spec.ale = ale;
  }
  if (s.ale_omega) spec.ale.omega = *s.ale_omega;
  if (s.ale_sweeps) spec.ale.sweeps = *s.ale_sweeps;
  for (const auto& [side, motion] : s.bc_motion) {
    AleStrategy::BoundaryRule rule;
    if (motion == "fixed") rule.motion = BoundaryMotion::Fixed;
    else if (motion == "slide") rule.motion = BoundaryMotion::Slide;
    else if (motion == "free") rule.motion = BoundaryMotion::Free;
    else throw NumericError("unknown boundary motion: " + motion);
    for (int bit = 1; bit <= boundary::generic; bit <<= 1)
      if (side_bit(side) & bit) spec.ale.boundary[bit] = rule;
  }
}

RunOptions make_options(const CliSettings& s) {
  RunOptions opt;
  opt.fem = s.fem == "p1" ? CellKind::Triangle : CellKind::Quad;
  if (!s.scheme.empty())
    opt.scheme = s.scheme == "v2" ? SchemeVersion::V2 : SchemeVersion::V1;
  if (!s.integrator.empty())
    opt.integrator = s.integrator == "euler" ? Integrator::ForwardEuler
                                             : Integrator::SspRk3;
  if (s.cfl) opt.cfl = *s.cfl;
  opt.no_viscosity = s.no_viscosity;
  opt.out_dir = s.out_dir;
  opt.dt_max = s.dt_max;
  opt.quiet = !s.verbose;
  return opt;
}

int run_command(const CliSettings& s) {
  BenchmarkSpec spec = benchmark(s.problem);
  apply_overrides(spec, s);
  const RunOptions opt = make_options(s);
  const RunResult result = run_benchmark(spec, s.level, opt);
  std::printf("problem=%s level=%d dofs=%ld steps=%ld reductions=%ld min_convexity=%.3e\n",
              spec.name.c_str(), s.level, result.dofs, result.steps, result.reductions,
              result.min_convexity);
  if (spec.exact)
    std::printf("l1_error=%.6e l2_error=%.6e\n", result.l1, result.l2);
  if (!s.out_dir.empty()) std::printf("artifacts written to %s\n", s.out_dir.c_str());
  return kExitOk;
}

int converge_command(const CliSettings& s) {
  BenchmarkSpec spec = benchmark(s.problem);
  apply_overrides(spec, s);
  const RunOptions opt = make_options(s);
  std::vector<int> levels = s.levels;
  if (levels.empty()) levels = {0, 1, 2};
  const auto rows = convergence_study(spec, levels, opt);
  std::printf("%10s %14s %8s %14s %8s\n", "dofs", "L1", "rate", "L2", "rate");
  for (const auto& row : rows)
    std::printf("%10ld %14.6e %8.3f %14.6e %8.3f\n", row.dofs, row.l1, row.l1_rate,
                row.l2, row.l2_rate);
  if (!s.out_dir.empty())
    std::printf("table written to %s/table.csv\n", s.out_dir.c_str());
  return kExitOk;
}

int check_command(unsigned seed, bool quick) {
  SuiteCounts counts;
  if (quick) {
    counts.invariant_steps = 40;
    counts.conservation_steps = 25;
    counts.dgcl_motions = 10;
    counts.equivalence_instances = 25;
    counts.entropy_steps = 25;
    counts.wave_speed_pairs = 2000;
  }
  const auto results = property_suites(seed, counts);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] %-18s worst=%.3e tol=%.1e  %s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.worst, r.tolerance, r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitInvariantViolation;
}

int mesh_info_command(const std::string& path) {
  const Mesh mesh = load_mesh(path);
  const bool valid = mesh_valid(mesh, QuadratureRule::assembly(mesh.kind));
  std::printf("dim=%d kind=%s nodes=%d cells=%d valid=%s volume=%.9g\n", mesh.dim,
              cell_kind_name(mesh.kind), mesh.n_nodes(), mesh.n_cells(),
              valid ? "yes" : "no", mesh.volume(QuadratureRule::assembly(mesh.kind)));
  return valid ? kExitOk : kExitSolverFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant-domain-preserving ALE solver for hyperbolic systems"};
  app.require_subcommand(1);

  CliSettings s;
  unsigned seed = 20260810;
  bool quick = false;
  std::string mesh_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--problem", s.problem, "rotation|burgers2d|kpp|sod|noh")->required(false);
    cmd->add_option("--scheme", s.scheme, "v1|v2");
    cmd->add_option("--integrator", s.integrator, "euler|ssp3");
    cmd->add_option("--fem", s.fem, "p1|q1");
    cmd->add_option("--cfl", s.cfl, "CFL multiplier");
    cmd->add_flag("--no-viscosity", s.no_viscosity, "disable graph viscosity");
    cmd->add_option("--out", s.out_dir, "output directory");
    cmd->add_option("--dt-max", s.dt_max, "time step cap");
    cmd->add_option("--config", s.config_path, "key=value config file (flags win)");
    cmd->add_flag("--verbose", s.verbose, "periodic progress lines");
  };

  CLI::App* run = app.add_subcommand("run", "run one benchmark level");
  add_common(run);
  run->add_option("--level", s.level, "mesh level");

  CLI::App* converge = app.add_subcommand("converge", "convergence study over levels");
  add_common(converge);
  converge->add_option("--levels", s.levels, "levels, e.g. --levels 0 1 2 3");

  CLI::App* check = app.add_subcommand("check", "run the property suites");
  check->add_option("--seed", seed, "random seed");
  check->add_flag("--quick", quick, "reduced trial counts");

  CLI::App* mesh_info = app.add_subcommand("mesh-info", "validate a plain-text mesh file");
  mesh_info->add_option("file", mesh_path, "mesh file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::set<std::string> flags_set;
    for (CLI::App* cmd : {run, converge}) {
      if (!cmd->parsed()) continue;
      for (const auto* option : cmd->get_options())
        if (option->count() > 0)
          flags_set.insert(option->get_name(false, true).substr(2));
      apply_config(s, flags_set);
    }
    if (run->parsed()) {
      if (s.problem.empty()) throw NumericError("run needs --problem");
      return run_command(s);
    }
    if (converge->parsed()) {
      if (s.problem.empty()) throw NumericError("converge needs --problem");
      return converge_command(s);
    }
    if (check->parsed()) return check_command(seed, quick);
    if (mesh_info->parsed()) return mesh_info_command(mesh_path);
  } catch (const InvariantViolation& err) {
    std::fprintf(stderr, "invariant violation: %s\n", err.what());
    return kExitInvariantViolation;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kExitSolverFailure;
  }
  return kExitUsage;
}
