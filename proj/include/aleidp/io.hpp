#pragma once

#include <string>
#include <vector>

#include "aleidp/mesh.hpp"
#include "aleidp/solver.hpp"

namespace aleidp {

// Legacy ASCII VTK unstructured grid with one point-data scalar per component.
void write_vtk(const std::string& path, const Mesh& mesh, const StateField& U,
               const std::vector<std::string>& component_names);

// One CSV row per accepted step: n, t, dt, reductions, min_convexity,
// conservation_defect, entropy_max.
void write_step_reports_csv(const std::string& path,
                            const std::vector<StepReport>& reports,
                            const State& initial_total);

double conservation_defect(const StepReport& report, const State& initial_total);

// Plain-text key=value config; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

}  // namespace aleidp
