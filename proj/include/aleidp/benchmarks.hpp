#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aleidp/norms.hpp"
#include "aleidp/solver.hpp"

namespace aleidp {

// A benchmark: system, mesh family, initial/boundary data, ALE strategy and
// the run parameters of its reference setup.
struct BenchmarkSpec {
  std::string name;
  SystemDescriptor system;
  std::function<Mesh(int level, CellKind fem)> mesh_family;
  std::function<State(const Vec2& x)> initial;
  BcTable bc;
  AleStrategy ale;
  double final_time = 1.0;
  double cfl = 0.5;
  SchemeVersion scheme = SchemeVersion::V1;
  Integrator integrator = Integrator::SspRk3;
  DtConvention dt_convention = DtConvention::Mesh;
  std::function<double(const Vec2& x, double t)> exact;  // error component, or null
  int error_component = 0;
  int refine_dims = 2;           // dimensions refined between levels
  bool check_invariants = true;  // per-step scalar bounds / Euler positivity
  bool conservation_check = false;  // periodic-only assertion
};

BenchmarkSpec benchmark(const std::string& name);
std::vector<std::string> benchmark_names();

// The four-quadrant nonuniform mesh variant of the implosion test.
Mesh noh_quadrant_mesh();

struct RunOptions {
  CellKind fem = CellKind::Quad;
  std::optional<SchemeVersion> scheme;
  std::optional<Integrator> integrator;
  std::optional<double> cfl;
  bool no_viscosity = false;
  double dt_max = std::numeric_limits<double>::infinity();
  int max_halvings = 20;
  std::string out_dir;  // empty: no files written
  bool quiet = true;
};

struct RunResult {
  SolverState state;
  long dofs = 0;
  long steps = 0;
  long reductions = 0;
  double min_convexity = 1.0;
  double max_conservation_defect = 0.0;
  double l1 = std::numeric_limits<double>::quiet_NaN();
  double l2 = std::numeric_limits<double>::quiet_NaN();
  State initial_total;
  std::vector<StepReport> reports;
};

// Build the level mesh, interpolate the initial data, run the time loop to
// final_time with the rejection/halving protocol, measure errors on the final
// mesh, and optionally write field dumps and step reports.
RunResult run_benchmark(const BenchmarkSpec& spec, int level, const RunOptions& opt);

struct ConvergenceRow {
  long dofs = 0;
  double l1 = 0.0;
  double l1_rate = std::numeric_limits<double>::quiet_NaN();
  double l2 = 0.0;
  double l2_rate = std::numeric_limits<double>::quiet_NaN();
};

// Runs the levels (concurrently up to ALE_IDP_THREADS) and tabulates rates
// against the per-level refinement factor 2 in each refined dimension.
std::vector<ConvergenceRow> convergence_study(const BenchmarkSpec& spec,
                                              const std::vector<int>& levels,
                                              const RunOptions& opt);

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRow>& rows);

// Thread budget: ALE_IDP_THREADS if set, else hardware concurrency.
int thread_budget();

}  // namespace aleidp
