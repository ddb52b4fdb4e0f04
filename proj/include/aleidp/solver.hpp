#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "aleidp/ale_motion.hpp"
#include "aleidp/stencil.hpp"
#include "aleidp/system.hpp"

namespace aleidp {

enum class SchemeVersion { V1, V2 };
enum class Integrator { ForwardEuler, SspRk3 };

// Discrete solution snapshot. mass holds the evolved shape-function masses for
// version 1 and the exact geometric masses for version 2; they coincide at t=0.
struct SolverState {
  Mesh mesh;
  StateField U;           // n_dofs x m
  Eigen::VectorXd mass;   // > 0 on accepted states
  double t = 0.0;
  long step = 0;
};

struct StepReport {
  double dt = 0.0;
  int reductions = 0;
  double min_convexity = 1.0;       // 1 - sum_j 2 d_ij dt / mass_i^{n+1}
  double max_rowsum_defect = 0.0;   // max_i |sum_j c_ij|
  State total_before;               // sum_i mass_i U_i
  State total_after;
  double entropy_max = std::numeric_limits<double>::quiet_NaN();
};

struct BcEntry {
  enum Kind { DoNothing, Dirichlet } kind = DoNothing;
  std::function<State(const Vec2& x, double t)> value;
};

// Boundary-condition table keyed by boundary bit. Periodic directions are
// resolved structurally at mesh build time (paired nodes share one dof), so
// they never appear here.
struct BcTable {
  std::map<int, BcEntry> entries;

  static BcTable none() { return {}; }
  void set_dirichlet(int bits, std::function<State(const Vec2&, double)> value);
  const BcEntry* dirichlet_for(int tag) const;
};

void apply_bc(SolverState& state, const BcTable& bc, double t);

struct StepOptions {
  bool viscosity = true;  // d_ij = 0 when off (time-accuracy studies)
};

struct StepResult {
  bool accepted = false;
  std::string reject_reason;
  SolverState state;  // meaningful only when accepted
  StepReport report;
  std::vector<double> d;          // graph viscosities actually used
  Eigen::VectorXd mass_next;      // masses after the step (also in state)
};

// Graph viscosity d_ij = max over the two orientations of the shifted maximal
// wave speed times |c|; symmetric, nonnegative off the diagonal, row sums zero.
std::vector<double> compute_dij(const StencilField& stencil, const StateField& U,
                                const VelocityField& W, const SystemDescriptor& system,
                                const Mesh& mesh, double t);

// One forward-Euler step of version 1: move nodes, update the approximate
// masses through the discrete divergence identity, update U conservatively.
// Rejected (not thrown) when a mass turns non-positive or the convexity
// certificate fails; the caller retries with dt/2.
StepResult euler_step_v1(const SolverState& state, const VelocityField& W, double dt,
                         const StencilField& stencil, const SystemDescriptor& system,
                         const BcTable& bc, const StepOptions& opt = {});

// One forward-Euler step of version 2: time-averaged c_ij on the intermediate
// meshes and exact masses on the end-of-step mesh.
StepResult euler_step_v2(const SolverState& state, const VelocityField& W, double dt,
                         const SystemDescriptor& system, const BcTable& bc,
                         const QuadratureRule& rule, const TimeQuadrature& tq,
                         std::shared_ptr<const DofGraph> graph,
                         const StepOptions& opt = {});

// Time-step bound cfl * min_i h_min_i / (2 lambda_i kappa_i); the mass-ratio
// factor is enforced a posteriori by the convexity check. Mesh convention
// replaces the theorem bound by the plain mesh-crossing bound
// cfl * min_i h_min_i / lambda_i with Eulerian speeds included.
enum class DtConvention { Theorem, Mesh };
double estimate_dt(const SolverState& state, const StencilField& stencil,
                   const VelocityField& W, const SystemDescriptor& system, double cfl,
                   double dt_max = std::numeric_limits<double>::infinity(),
                   DtConvention convention = DtConvention::Theorem);

// Three-stage strong-stability-preserving RK3 wrapper over version-1 Euler
// steps; node positions and masses are combined convexly, states by
// mass-weighted convex combinations. ALE velocities are re-evaluated at t,
// t+dt and t+dt/2.
StepResult ssp_rk3_step(const SolverState& state, const AleStrategy& ale, double dt,
                        const SystemDescriptor& system, const BcTable& bc,
                        const QuadratureRule& rule,
                        std::shared_ptr<const DofGraph> graph,
                        const StepOptions& opt = {},
                        const StencilField* stage0_stencil = nullptr);

// Non-conservative form of the update; exists for the equivalence check.
StateField nonconservative_update(const SolverState& state, const VelocityField& W,
                                  double dt, const StencilField& stencil,
                                  const std::vector<double>& d,
                                  const SystemDescriptor& system);

// Per-dof discrete entropy production of an accepted version-1 step; the
// theory guarantees it is nonpositive.
Eigen::VectorXd entropy_residual(const SolverState& before, const SolverState& after,
                                 const StencilField& stencil, const std::vector<double>& d,
                                 const VelocityField& W, const SystemDescriptor& system,
                                 const EntropyPair& pair);

// Outer-loop driver: estimate dt, build ALE velocities, retry with halved dt
// on invalid motion or rejected steps.
struct AdvanceConfig {
  SchemeVersion scheme = SchemeVersion::V1;
  Integrator integrator = Integrator::ForwardEuler;
  double cfl = 0.5;
  double dt_max = std::numeric_limits<double>::infinity();
  int max_halvings = 20;
  DtConvention dt_convention = DtConvention::Theorem;
  StepOptions step;
};

struct AdvanceResult {
  SolverState state;
  StepReport report;
  VelocityField W;       // velocities of the accepted motion (first stage)
  double dt = 0.0;
  std::vector<double> d;
};

AdvanceResult advance(const SolverState& state, const AleStrategy& ale,
                      const SystemDescriptor& system, const BcTable& bc,
                      const AdvanceConfig& config, const QuadratureRule& rule,
                      std::shared_ptr<const DofGraph> graph, double t_end,
                      const VelocityField* W_hint = nullptr);

}  // namespace aleidp
