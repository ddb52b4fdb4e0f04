#pragma once

#include <memory>
#include <vector>

#include "aleidp/mesh.hpp"

namespace aleidp {

// Per-time-level stencil quantities on the dof adjacency graph: the vectors
// c_ij = int grad(psi_j) psi_i dx, lumped masses, the local minimum mesh size
// h_min_i and the mesh structure parameter kappa_i.
//
// Row sums of c vanish to machine precision (partition of unity). Interior
// pairs are antisymmetrized after assembly; the pre-symmetrization defect is
// recorded.
struct StencilField {
  std::shared_ptr<const DofGraph> graph;
  std::vector<Vec2> c;      // per CSR entry
  Eigen::VectorXd mass;     // lumped mass per dof, all > 0
  Eigen::VectorXd h_min;    // per dof
  Eigen::VectorXd kappa;    // per dof
  double presym_defect = 0.0;

  int n_dofs() const { return graph->n_dofs; }
  const Vec2& at(int entry) const { return c[entry]; }
  double max_rowsum_defect() const;
};

StencilField assemble_stencil(const Mesh& mesh, const QuadratureRule& rule,
                              std::shared_ptr<const DofGraph> graph);
StencilField assemble_stencil(const Mesh& mesh, const QuadratureRule& rule);

// Time-averaged stencil for the continuous-motion scheme: assembles on the
// intermediate meshes a + dt*zeta_l*W and combines with weights omega_l.
// h_min is the min over intermediate levels; kappa and mass are the
// omega-weighted combinations.
StencilField temporal_stencil(const Mesh& mesh, const VelocityField& W, double dt,
                              const QuadratureRule& rule, const TimeQuadrature& tq,
                              std::shared_ptr<const DofGraph> graph);

// Lumped masses int psi_i dx on the current mesh.
Eigen::VectorXd exact_masses(const Mesh& mesh, const QuadratureRule& rule);

// Max over sampled (cell, quadrature point) of the defect of the transport
// identity for det J under mesh motion W, using a forward difference with
// step dt_probe. O(dt_probe) for bilinear-in-time maps.
double liouville_residual(const Mesh& mesh, const VelocityField& W, double dt_probe,
                          const QuadratureRule& rule);

}  // namespace aleidp
