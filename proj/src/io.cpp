#include "aleidp/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

namespace aleidp {

void write_vtk(const std::string& path, const Mesh& mesh, const StateField& U,
               const std::vector<std::string>& component_names) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# vtk DataFile Version 3.0\n";
  out << "ale-idp field t=" << mesh.time << "\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << std::setprecision(12);

  const int nn = mesh.n_nodes();
  out << "POINTS " << nn << " double\n";
  for (int k = 0; k < nn; ++k) {
    const Vec2 x = mesh.node_pos(k);
    out << x[0] << " " << x[1] << " 0\n";
  }
  const int nl = mesh.n_local();
  out << "CELLS " << mesh.n_cells() << " " << mesh.n_cells() * (nl + 1) << "\n";
  for (const auto& cell : mesh.cells) {
    out << nl;
    for (int a = 0; a < nl; ++a) out << " " << cell[a];
    out << "\n";
  }
  const int vtk_type = mesh.kind == CellKind::Quad ? 9
                       : mesh.kind == CellKind::Triangle ? 5
                                                         : 3;
  out << "CELL_TYPES " << mesh.n_cells() << "\n";
  for (int c = 0; c < mesh.n_cells(); ++c) out << vtk_type << "\n";

  out << "POINT_DATA " << nn << "\n";
  for (std::size_t comp = 0; comp < component_names.size(); ++comp) {
    out << "SCALARS " << component_names[comp] << " double 1\n";
    out << "LOOKUP_TABLE default\n";
    for (int k = 0; k < nn; ++k) out << U(mesh.node_dof[k], comp) << "\n";
  }
}

double conservation_defect(const StepReport& report, const State& initial_total) {
  if (initial_total.size() == 0) return 0.0;
  const double scale = std::max(initial_total.cwiseAbs().maxCoeff(), 1e-300);
  return (report.total_after - initial_total).cwiseAbs().maxCoeff() / scale;
}

void write_step_reports_csv(const std::string& path,
                            const std::vector<StepReport>& reports,
                            const State& initial_total) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,t,dt,reductions,min_convexity,conservation_defect,entropy_max\n";
  out << std::setprecision(15);
  double t = 0.0;
  for (std::size_t n = 0; n < reports.size(); ++n) {
    const StepReport& r = reports[n];
    t += r.dt;
    out << n << "," << t << "," << r.dt << "," << r.reductions << ","
        << r.min_convexity << "," << conservation_defect(r, initial_total) << ","
        << r.entropy_max << "\n";
  }
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) entries.emplace_back(key, value);
  }
  return entries;
}

}  // namespace aleidp
