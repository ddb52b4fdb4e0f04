#include "aleidp/mesh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace aleidp {

void Mesh::move(const VelocityField& W, double dt) {
  pos += dt * W;
  time += dt;
}

Mesh Mesh::moved(const VelocityField& W, double dt) const {
  Mesh out = *this;
  out.move(W, dt);
  return out;
}

double Mesh::volume(const QuadratureRule& rule) const {
  double vol = 0.0;
  for (int c = 0; c < n_cells(); ++c)
    for (std::size_t q = 0; q < rule.points.size(); ++q)
      vol += rule.weights[q] * geometric_map(*this, c, rule.points[q]).detJ;
  return vol;
}

MapPoint geometric_map(const Mesh& mesh, int cell, const Vec2& xhat) {
  const ReferenceElement ref(mesh.kind);
  MapPoint mp;
  mp.x.setZero();
  mp.J.setZero();
  for (int a = 0; a < ref.node_count(); ++a) {
    const Vec2 node = mesh.node_pos(mesh.cells[cell][a]);
    mp.x += node * ref.shape_value(a, xhat);
    mp.J += node * ref.shape_gradient(a, xhat).transpose();
  }
  if (mesh.dim == 1) mp.J.col(1) = Vec2(0.0, 1.0);  // filler axis
  mp.detJ = mp.J.determinant();
  return mp;
}

bool mesh_valid(const Mesh& mesh, const QuadratureRule& rule) {
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (const Vec2& q : rule.points)
      if (geometric_map(mesh, c, q).detJ <= 0.0) return false;
  return true;
}

Mesh make_segment_mesh(double x0, double x1, int n_cells, bool periodic) {
  if (n_cells < 1) throw MeshError("segment mesh needs at least one cell");
  Mesh mesh;
  mesh.dim = 1;
  mesh.kind = CellKind::Segment;
  const int n_nodes = n_cells + 1;
  const int n_dofs = periodic ? n_cells : n_nodes;
  mesh.pos.resize(n_dofs, 2);
  const double h = (x1 - x0) / n_cells;
  for (int i = 0; i < n_dofs; ++i) mesh.pos.row(i) = Vec2(x0 + i * h, 0.0).transpose();
  mesh.node_dof.resize(n_nodes);
  mesh.node_shift.assign(n_nodes, Vec2::Zero());
  for (int i = 0; i < n_nodes; ++i) mesh.node_dof[i] = i % n_dofs;
  if (periodic) mesh.node_shift[n_nodes - 1] = Vec2(x1 - x0, 0.0);
  for (int c = 0; c < n_cells; ++c) mesh.cells.push_back({c, c + 1, -1, -1});
  mesh.dof_tag.assign(n_dofs, boundary::interior);
  if (!periodic) {
    mesh.dof_tag.front() = boundary::left;
    mesh.dof_tag.back() = boundary::right;
  }
  return mesh;
}

Mesh make_tensor_mesh(CellKind kind, const std::vector<double>& xs,
                      const std::vector<double>& ys, bool periodic_x,
                      bool periodic_y) {
  if (kind == CellKind::Segment) throw MeshError("tensor mesh is 2D");
  const int nx = static_cast<int>(xs.size()) - 1;
  const int ny = static_cast<int>(ys.size()) - 1;
  if (nx < 1 || ny < 1) throw MeshError("tensor mesh needs at least one cell per direction");
  if ((periodic_x && nx < 3) || (periodic_y && ny < 3))
    throw MeshError("periodic direction needs at least three cells");

  Mesh mesh;
  mesh.dim = 2;
  mesh.kind = kind;
  const int mx = periodic_x ? nx : nx + 1;  // dofs per direction
  const int my = periodic_y ? ny : ny + 1;
  mesh.pos.resize(mx * my, 2);
  mesh.dof_tag.assign(mx * my, boundary::interior);
  auto dof_id = [&](int i, int j) { return j * mx + i; };
  for (int j = 0; j < my; ++j)
    for (int i = 0; i < mx; ++i) {
      mesh.pos.row(dof_id(i, j)) = Vec2(xs[i], ys[j]).transpose();
      int tag = boundary::interior;
      if (!periodic_x && i == 0) tag |= boundary::left;
      if (!periodic_x && i == nx) tag |= boundary::right;
      if (!periodic_y && j == 0) tag |= boundary::bottom;
      if (!periodic_y && j == ny) tag |= boundary::top;
      mesh.dof_tag[dof_id(i, j)] = tag;
    }

  const double Lx = xs.back() - xs.front();
  const double Ly = ys.back() - ys.front();
  const int wx = nx + 1, wy = ny + 1;  // geometric nodes per direction
  mesh.node_dof.resize(wx * wy);
  mesh.node_shift.assign(wx * wy, Vec2::Zero());
  auto node_id = [&](int i, int j) { return j * wx + i; };
  for (int j = 0; j < wy; ++j)
    for (int i = 0; i < wx; ++i) {
      const int di = periodic_x ? i % nx : i;
      const int dj = periodic_y ? j % ny : j;
      mesh.node_dof[node_id(i, j)] = dof_id(di, dj);
      Vec2 shift = Vec2::Zero();
      if (periodic_x && i == nx) shift[0] = Lx;
      if (periodic_y && j == ny) shift[1] = Ly;
      mesh.node_shift[node_id(i, j)] = shift;
    }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int v00 = node_id(i, j), v10 = node_id(i + 1, j);
      const int v11 = node_id(i + 1, j + 1), v01 = node_id(i, j + 1);
      if (kind == CellKind::Quad) {
        mesh.cells.push_back({v00, v10, v11, v01});
      } else {
        // split along the (i,j)-(i+1,j+1) diagonal
        mesh.cells.push_back({v00, v10, v11, -1});
        mesh.cells.push_back({v00, v11, v01, -1});
      }
    }
  return mesh;
}

Mesh make_box_mesh(CellKind kind, const Vec2& lo, const Vec2& hi, int nx, int ny,
                   bool periodic_x, bool periodic_y) {
  std::vector<double> xs(nx + 1), ys(ny + 1);
  for (int i = 0; i <= nx; ++i) xs[i] = lo[0] + (hi[0] - lo[0]) * i / nx;
  for (int j = 0; j <= ny; ++j) ys[j] = lo[1] + (hi[1] - lo[1]) * j / ny;
  return make_tensor_mesh(kind, xs, ys, periodic_x, periodic_y);
}

namespace {

// Topological boundary dofs: endpoints of facets that belong to one cell only.
std::vector<char> boundary_dofs(const Mesh& mesh) {
  std::map<std::pair<int, int>, int> facet_count;
  const int nl = mesh.n_local();
  for (int c = 0; c < mesh.n_cells(); ++c) {
    if (mesh.dim == 1) {
      for (int a = 0; a < 2; ++a) {
        const int d = mesh.cell_dof(c, a);
        ++facet_count[{d, d}];
      }
    } else {
      for (int a = 0; a < nl; ++a) {
        int i = mesh.cell_dof(c, a);
        int j = mesh.cell_dof(c, (a + 1) % nl);
        if (i > j) std::swap(i, j);
        ++facet_count[{i, j}];
      }
    }
  }
  std::vector<char> on_boundary(mesh.n_dofs(), 0);
  for (const auto& [facet, count] : facet_count)
    if (count == 1) {
      on_boundary[facet.first] = 1;
      on_boundary[facet.second] = 1;
    }
  return on_boundary;
}

}  // namespace

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file: " + path);
  int dim = 0, nnodes = 0, ncells = 0;
  std::string kind_name;
  in >> dim >> nnodes >> ncells >> kind_name;
  if (!in || dim < 1 || dim > 2 || nnodes < 2 || ncells < 1)
    throw MeshError("bad mesh header in " + path);

  Mesh mesh;
  mesh.dim = dim;
  mesh.kind = cell_kind_from_name(kind_name);
  if ((dim == 1) != (mesh.kind == CellKind::Segment))
    throw MeshError("element kind does not match dimension in " + path);
  mesh.pos.resize(nnodes, 2);
  for (int i = 0; i < nnodes; ++i) {
    double x = 0, y = 0;
    in >> x;
    if (dim == 2) in >> y;
    mesh.pos.row(i) = Vec2(x, y).transpose();
  }
  mesh.node_dof.resize(nnodes);
  for (int i = 0; i < nnodes; ++i) mesh.node_dof[i] = i;
  mesh.node_shift.assign(nnodes, Vec2::Zero());
  const int nl = mesh.n_local();
  for (int c = 0; c < ncells; ++c) {
    std::array<int, 4> cell{-1, -1, -1, -1};
    for (int a = 0; a < nl; ++a) {
      int v = 0;
      in >> v;
      if (v < 1 || v > nnodes) throw MeshError("bad connectivity in " + path);
      cell[a] = v - 1;
    }
    mesh.cells.push_back(cell);
  }
  if (!in) throw MeshError("truncated mesh file: " + path);

  mesh.dof_tag.assign(nnodes, boundary::interior);
  const auto bnd = boundary_dofs(mesh);
  for (int i = 0; i < nnodes; ++i)
    if (bnd[i]) mesh.dof_tag[i] = boundary::generic;
  return mesh;
}

int DofGraph::find(int i, int j) const {
  for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
    if (col[k] == j) return k;
  return -1;
}

DofGraph build_dof_graph(const Mesh& mesh) {
  DofGraph g;
  g.n_dofs = mesh.n_dofs();
  const int nl = mesh.n_local();

  std::vector<std::vector<int>> adj(g.n_dofs);
  g.cell_dofs.resize(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) {
    auto& dofs = g.cell_dofs[c];
    dofs = {-1, -1, -1, -1};
    for (int a = 0; a < nl; ++a) dofs[a] = mesh.cell_dof(c, a);
    for (int a = 0; a < nl; ++a)
      for (int b = 0; b < nl; ++b) adj[dofs[a]].push_back(dofs[b]);
  }
  g.row_ptr.assign(g.n_dofs + 1, 0);
  for (int i = 0; i < g.n_dofs; ++i) {
    auto& row = adj[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    g.row_ptr[i + 1] = g.row_ptr[i] + static_cast<int>(row.size());
  }
  g.col.reserve(g.row_ptr.back());
  for (const auto& row : adj) g.col.insert(g.col.end(), row.begin(), row.end());

  g.trans.resize(g.col.size());
  g.diag.resize(g.n_dofs);
  for (int i = 0; i < g.n_dofs; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      g.trans[k] = g.find(g.col[k], i);
      if (g.col[k] == i) g.diag[i] = k;
    }

  g.cell_slot.resize(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) {
    g.cell_slot[c].fill(-1);
    for (int a = 0; a < nl; ++a)
      for (int b = 0; b < nl; ++b)
        g.cell_slot[c][a * nl + b] = g.find(g.cell_dofs[c][a], g.cell_dofs[c][b]);
  }
  return g;
}

}  // namespace aleidp
