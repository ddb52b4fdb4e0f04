#pragma once

#include <string>
#include <vector>

#include "aleidp/solver.hpp"

namespace aleidp {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;      // worst observed defect, in the tolerance's units
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteCounts {
  int invariant_steps = 200;
  int conservation_steps = 100;
  int dgcl_motions = 50;
  int equivalence_instances = 100;
  int entropy_steps = 100;
  int wave_speed_pairs = 10000;
};

// Randomized verification of the scheme's structural guarantees: local
// invariance, conservation, constant-state preservation, the equivalence of
// the conservative and non-conservative forms, the mass/geometry identities,
// the entropy inequality, and wave-speed bound dominance.
CheckResult check_invariant_domain(unsigned seed, int trials);
CheckResult check_conservation(unsigned seed, int steps);
CheckResult check_dgcl(unsigned seed, int motions);
CheckResult check_equivalence(unsigned seed, int instances);
CheckResult check_gcl_geometry(unsigned seed);
CheckResult check_entropy(unsigned seed, int steps);
CheckResult check_wave_speeds(unsigned seed, int pairs);

std::vector<CheckResult> property_suites(unsigned seed, const SuiteCounts& counts = {});

}  // namespace aleidp
