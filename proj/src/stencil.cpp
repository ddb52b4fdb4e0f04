#include "aleidp/stencil.hpp"

#include <cmath>
#include <limits>

namespace aleidp {

double StencilField::max_rowsum_defect() const {
  const DofGraph& g = *graph;
  double worst = 0.0;
  for (int i = 0; i < g.n_dofs; ++i) {
    Vec2 sum = Vec2::Zero();
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) sum += c[k];
    worst = std::max(worst, sum.norm());
  }
  return worst;
}

namespace {

struct RawStencil {
  std::vector<Vec2> c;
  Eigen::VectorXd mass;
  std::vector<double> sup_grad;      // per pair: sup of |grad psi_j| over S_ij
  Eigen::VectorXd kappa_numerator;   // sum_{j != i} int_{S_ij} psi_i
};

RawStencil assemble_raw(const Mesh& mesh, const QuadratureRule& rule,
                        const DofGraph& g) {
  const ReferenceElement ref(mesh.kind);
  const int nl = ref.node_count();
  const int nq = static_cast<int>(rule.points.size());

  RawStencil raw;
  raw.c.assign(g.col.size(), Vec2::Zero());
  raw.mass = Eigen::VectorXd::Zero(g.n_dofs);
  raw.sup_grad.assign(g.col.size(), 0.0);
  raw.kappa_numerator = Eigen::VectorXd::Zero(g.n_dofs);

  // Reference shape data, evaluated once.
  std::vector<double> theta(nq * nl);
  std::vector<Vec2> dtheta(nq * nl);
  for (int q = 0; q < nq; ++q)
    for (int a = 0; a < nl; ++a) {
      theta[q * nl + a] = ref.shape_value(a, rule.points[q]);
      dtheta[q * nl + a] = ref.shape_gradient(a, rule.points[q]);
    }

  std::array<Vec2, 4> corner;
  std::array<Vec2, 4> grad;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    for (int a = 0; a < nl; ++a) corner[a] = mesh.node_pos(mesh.cells[c][a]);
    const auto& slot = g.cell_slot[c];
    const auto& dofs = g.cell_dofs[c];
    for (int q = 0; q < nq; ++q) {
      Eigen::Matrix2d J = Eigen::Matrix2d::Zero();
      for (int a = 0; a < nl; ++a) J += corner[a] * dtheta[q * nl + a].transpose();
      if (mesh.dim == 1) J.col(1) = Vec2(0.0, 1.0);
      const double det = J.determinant();
      if (det <= 0.0)
        throw MeshError("non-positive Jacobian in cell " + std::to_string(c) +
                        " at t=" + std::to_string(mesh.time));
      // grad psi = J^{-T} grad theta; fold det into the weight instead of
      // inverting twice: adj(J)^T grad theta = det * J^{-T} grad theta.
      Eigen::Matrix2d adjT;
      adjT << J(1, 1), -J(1, 0), -J(0, 1), J(0, 0);
      for (int a = 0; a < nl; ++a) grad[a] = adjT * dtheta[q * nl + a];
      const double w = rule.weights[q];  // w * det is the physical weight
      const double inv_det = 1.0 / det;
      for (int a = 0; a < nl; ++a) {
        const double wth = w * theta[q * nl + a];
        raw.mass[dofs[a]] += wth * det;
        raw.kappa_numerator[dofs[a]] += wth * det * (nl - 1);
        for (int b = 0; b < nl; ++b) {
          const int s = slot[a * nl + b];
          raw.c[s] += wth * grad[b];  // det cancels against J^{-T}
          const double gn = grad[b].norm() * inv_det;
          if (gn > raw.sup_grad[s]) raw.sup_grad[s] = gn;
        }
      }
    }
  }
  return raw;
}

}  // namespace

StencilField assemble_stencil(const Mesh& mesh, const QuadratureRule& rule,
                              std::shared_ptr<const DofGraph> graph) {
  const DofGraph& g = *graph;
  RawStencil raw = assemble_raw(mesh, rule, g);

  StencilField st;
  st.graph = graph;
  st.c = std::move(raw.c);
  st.mass = std::move(raw.mass);
  for (int i = 0; i < g.n_dofs; ++i)
    if (!(st.mass[i] > 0.0))
      throw AssemblyError("non-positive lumped mass at dof " + std::to_string(i));

  st.kappa = raw.kappa_numerator.cwiseQuotient(st.mass);

  st.h_min = Eigen::VectorXd::Constant(g.n_dofs, std::numeric_limits<double>::infinity());
  for (int i = 0; i < g.n_dofs; ++i)
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
      if (raw.sup_grad[k] > 0.0)
        st.h_min[i] = std::min(st.h_min[i], 1.0 / raw.sup_grad[k]);

  // Conservation requires exact interior antisymmetry; enforce it pairwise and
  // keep the measured defect.
  double defect = 0.0;
  for (int i = 0; i < g.n_dofs; ++i) {
    if (mesh.dof_tag[i] != boundary::interior) continue;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      if (j <= i || mesh.dof_tag[j] != boundary::interior) continue;
      const int kt = g.trans[k];
      defect = std::max(defect, (st.c[k] + st.c[kt]).norm());
      const Vec2 half = 0.5 * (st.c[k] - st.c[kt]);
      st.c[k] = half;
      st.c[kt] = -half;
    }
  }
  st.presym_defect = defect;
  return st;
}

StencilField assemble_stencil(const Mesh& mesh, const QuadratureRule& rule) {
  return assemble_stencil(mesh, rule, std::make_shared<DofGraph>(build_dof_graph(mesh)));
}

StencilField temporal_stencil(const Mesh& mesh, const VelocityField& W, double dt,
                              const QuadratureRule& rule, const TimeQuadrature& tq,
                              std::shared_ptr<const DofGraph> graph) {
  const DofGraph& g = *graph;
  StencilField st;
  st.graph = graph;
  st.c.assign(g.col.size(), Vec2::Zero());
  st.mass = Eigen::VectorXd::Zero(g.n_dofs);
  st.h_min = Eigen::VectorXd::Constant(g.n_dofs, std::numeric_limits<double>::infinity());
  Eigen::VectorXd kappa_num = Eigen::VectorXd::Zero(g.n_dofs);

  for (std::size_t l = 0; l < tq.nodes.size(); ++l) {
    Mesh level = mesh.moved(W, dt * tq.nodes[l]);
    RawStencil raw;
    try {
      raw = assemble_raw(level, rule, g);
    } catch (const MeshError& err) {
      throw MeshError("intermediate mesh at zeta=" + std::to_string(tq.nodes[l]) +
                      " inverted: " + err.what());
    }
    const double w = tq.weights[l];
    for (std::size_t k = 0; k < st.c.size(); ++k) st.c[k] += w * raw.c[k];
    st.mass += w * raw.mass;
    kappa_num += w * raw.kappa_numerator;
    for (int i = 0; i < g.n_dofs; ++i)
      for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k)
        if (raw.sup_grad[k] > 0.0)
          st.h_min[i] = std::min(st.h_min[i], 1.0 / raw.sup_grad[k]);
  }
  st.kappa = kappa_num.cwiseQuotient(st.mass);

  double defect = 0.0;
  for (int i = 0; i < g.n_dofs; ++i) {
    if (mesh.dof_tag[i] != boundary::interior) continue;
    for (int k = g.row_ptr[i]; k < g.row_ptr[i + 1]; ++k) {
      const int j = g.col[k];
      if (j <= i || mesh.dof_tag[j] != boundary::interior) continue;
      const int kt = g.trans[k];
      defect = std::max(defect, (st.c[k] + st.c[kt]).norm());
      const Vec2 half = 0.5 * (st.c[k] - st.c[kt]);
      st.c[k] = half;
      st.c[kt] = -half;
    }
  }
  st.presym_defect = defect;
  return st;
}

Eigen::VectorXd exact_masses(const Mesh& mesh, const QuadratureRule& rule) {
  const ReferenceElement ref(mesh.kind);
  const int nl = ref.node_count();
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(mesh.n_dofs());
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const MapPoint mp = geometric_map(mesh, c, rule.points[q]);
      if (mp.detJ <= 0.0)
        throw MeshError("non-positive Jacobian in cell " + std::to_string(c));
      for (int a = 0; a < nl; ++a)
        mass[mesh.cell_dof(c, a)] +=
            rule.weights[q] * ref.shape_value(a, rule.points[q]) * mp.detJ;
    }
  for (int i = 0; i < mesh.n_dofs(); ++i)
    if (!(mass[i] > 0.0))
      throw AssemblyError("non-positive lumped mass at dof " + std::to_string(i));
  return mass;
}

double liouville_residual(const Mesh& mesh, const VelocityField& W, double dt_probe,
                          const QuadratureRule& rule) {
  const ReferenceElement ref(mesh.kind);
  const int nl = ref.node_count();
  const Mesh probe = mesh.moved(W, dt_probe);
  if (!mesh_valid(probe, rule)) throw MeshError("probe mesh inverted");

  double worst = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c)
    for (const Vec2& q : rule.points) {
      const MapPoint now = geometric_map(mesh, c, q);
      const MapPoint next = geometric_map(probe, c, q);
      const double ddet_fd = (next.detJ - now.detJ) / dt_probe;
      // div of the interpolated velocity at the mapped point
      double div_v = 0.0;
      const Eigen::Matrix2d JinvT = now.J.inverse().transpose();
      for (int a = 0; a < nl; ++a) {
        Vec2 grad = JinvT * ref.shape_gradient(a, q);
        if (mesh.dim == 1) grad[1] = 0.0;
        div_v += W.row(mesh.cell_dof(c, a)).dot(grad);
      }
      worst = std::max(worst, std::abs(ddet_fd - div_v * now.detJ));
    }
  return worst;
}

}  // namespace aleidp
