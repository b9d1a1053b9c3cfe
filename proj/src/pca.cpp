#include <algorithm>

#include "glareview/enhance.hpp"
#include "glareview/jacobi.hpp"

namespace glareview {

namespace {

// Exact integer channel moments over the sampling grid.
struct ChannelMoments {
  std::uint64_t count = 0;
  std::array<std::uint64_t, 3> sum{};
  std::array<std::array<std::uint64_t, 3>, 3> cross{};
};

ChannelMoments gather_moments(const Frame& frame, std::uint32_t stride) {
  ChannelMoments m;
  for (std::uint32_t y = 0; y < frame.height(); y += stride) {
    for (std::uint32_t x = 0; x < frame.width(); x += stride) {
      const Rgb p = frame.at(x, y);
      const std::array<std::uint64_t, 3> c = {p.r, p.g, p.b};
      ++m.count;
      for (int i = 0; i < 3; ++i) {
        m.sum[i] += c[i];
        for (int j = i; j < 3; ++j) m.cross[i][j] += c[i] * c[j];
      }
    }
  }
  return m;
}

PcaBasis basis_from_moments(const ChannelMoments& m) {
  PcaBasis basis;
  const auto n = static_cast<double>(m.count);
  for (int i = 0; i < 3; ++i) basis.mean[i] = static_cast<double>(m.sum[i]) / n;

  Mat3 cov{};
  if (m.count >= 2) {
    const double denom = n * (n - 1.0);
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        // n * sum(xy) - sum(x) sum(y) is exact in 128 bits.
        const __int128 scaled =
            static_cast<__int128>(m.count) * m.cross[i][j] -
            static_cast<__int128>(m.sum[i]) * m.sum[j];
        cov[i][j] = cov[j][i] = static_cast<double>(scaled) / denom;
      }
    }
  }

  const Eigen3 eig = symmetric_eigen3(cov);
  for (int i = 0; i < 3; ++i) {
    basis.eigenvalues[i] = std::max(0.0, eig.values[i]);
  }
  basis.eigenvectors = eig.vectors;
  return basis;
}

}  // namespace

PcaBasis compute_pca_basis(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  return basis_from_moments(gather_moments(frame, params.stats_subsample));
}

std::array<double, 3> project(const PcaBasis& basis, Rgb c) {
  const std::array<double, 3> centered = {c.r - basis.mean[0],
                                          c.g - basis.mean[1],
                                          c.b - basis.mean[2]};
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const auto& v = basis.eigenvectors[i];
    out[i] = v[0] * centered[0] + v[1] * centered[1] + v[2] * centered[2];
  }
  return out;
}

Frame decorr_threshold(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  const ChannelMoments m = gather_moments(frame, params.stats_subsample);
  const PcaBasis basis = basis_from_moments(m);

  // Classification uses count * (x - mean) = count * x - sum, which is an
  // exact integer, so pixels sitting on the mean project to exactly zero.
  // terms[i][c][x] is component i's contribution from channel c at value x.
  std::array<std::array<std::array<double, 256>, 3>, 3> terms{};
  std::array<bool, 3> active{};
  for (int i = 0; i < 3; ++i) {
    active[i] = basis.eigenvalues[i] > params.var_epsilon;
    for (int c = 0; c < 3; ++c) {
      const double weight = basis.eigenvectors[i][c];
      for (int x = 0; x < 256; ++x) {
        const auto centered = static_cast<std::int64_t>(m.count) * x -
                              static_cast<std::int64_t>(m.sum[c]);
        terms[i][c][x] = weight * static_cast<double>(centered);
      }
    }
  }

  Frame out(frame.width(), frame.height());
  auto src = frame.bytes();
  auto dst = out.bytes();
  for (std::size_t k = 0; k < src.size(); k += 3) {
    for (int i = 0; i < 3; ++i) {
      const double p =
          terms[i][0][src[k]] + terms[i][1][src[k + 1]] + terms[i][2][src[k + 2]];
      dst[k + i] = (active[i] && p >= 0.0) ? 255 : 0;
    }
  }
  return out;
}

}  // namespace glareview
