#include "glareview/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace glareview {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kRelativeTolerance = 1e-10;

double max_off_diagonal(const Mat3& a) {
  return std::max({std::abs(a[0][1]), std::abs(a[0][2]), std::abs(a[1][2])});
}

void normalize_sign(std::array<double, 3>& v) {
  std::size_t lead = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
  }
  if (v[lead] < 0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

Eigen3 symmetric_eigen3(const Mat3& input) {
  Mat3 a = input;
  // Columns of v accumulate the rotations.
  Mat3 v = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const double tol =
      kRelativeTolerance * std::abs(a[0][0] + a[1][1] + a[2][2]);

  int sweep = 0;
  for (; sweep < kMaxSweeps && max_off_diagonal(a) > tol; ++sweep) {
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        const int r = 3 - p - q;
        const double arp = a[r][p];
        const double arq = a[r][q];
        a[r][p] = a[p][r] = c * arp - s * arq;
        a[r][q] = a[q][r] = s * arp + c * arq;

        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i][i] > a[j][j]; });

  Eigen3 out;
  out.sweeps = sweep;
  for (int i = 0; i < 3; ++i) {
    const int src = order[i];
    out.values[i] = a[src][src];
    for (int k = 0; k < 3; ++k) out.vectors[i][k] = v[k][src];
    normalize_sign(out.vectors[i]);
  }
  return out;
}

}  // namespace glareview
