#pragma once

#include <array>

namespace glareview {

using Mat3 = std::array<std::array<double, 3>, 3>;

struct Eigen3 {
  std::array<double, 3> values{};  // descending
  Mat3 vectors{};                   // rows, unit length, sign-normalized
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a symmetric 3x3 matrix until every off-diagonal
// entry is <= 1e-10 * |trace| (at most 30 sweeps). Eigenpairs are stably
// sorted by descending eigenvalue and each vector is flipped so its
// largest-magnitude component (first on ties) is positive.
Eigen3 symmetric_eigen3(const Mat3& a);

}  // namespace glareview
