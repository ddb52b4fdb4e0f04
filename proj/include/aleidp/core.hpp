#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace aleidp {

// Spatial vectors are always stored with two components; 1D meshes live on the
// x-axis and carry a zero y-component everywhere.
using Vec2 = Eigen::Vector2d;

// Conserved state with runtime component count m <= 4 (scalar or 2D Euler).
// Fixed capacity keeps hot loops allocation-free.
using State = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 4, 1>;

// Flux matrix, m x 2.
using FluxMat = Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::ColMajor, 4, 2>;

// Per-dof fields, one row per dof. Row-major so a dof's data is contiguous.
using StateField = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VelocityField = Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor>;

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed state left its invariant set (scalar bounds, Euler positivity).
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary tags are bitmasks so corner dofs can carry two sides.
namespace boundary {
constexpr int interior = 0;
constexpr int left = 1;
constexpr int right = 2;
constexpr int bottom = 4;
constexpr int top = 8;
constexpr int generic = 16;
constexpr int any = left | right | bottom | top | generic;
}  // namespace boundary

}  // namespace aleidp
