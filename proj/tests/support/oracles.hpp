#pragma once

// Independent reference computations used only by tests. They follow the
// textbook definitions directly (pixel lists, rationals, two-pass moments)
// rather than the histogram and integer-moment shortcuts of the library.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "glareview/image.hpp"

namespace glareview::testing {

// Exact rational with 128-bit parts, always reduced, positive denominator.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd(n, d);
    return {n / g, d / g};
  }
  friend Rational operator-(Rational a, Rational b) {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    const Rational x = make(a.num, b.den);
    const Rational y = make(b.num, a.den);
    return make(x.num * y.num, x.den * y.den);
  }
  friend bool operator>(Rational a, Rational b) {
    return a.num * b.den > b.num * a.den;
  }
};

// Exhaustive two-class search: omega0 * omega1 * (mu0 - mu1)^2 for every
// t in [0, 254], classes {v <= t} and {v > t}, smallest maximizing t. Returns
// the sole value when every t leaves a class empty.
inline int brute_force_otsu(const std::vector<int>& values) {
  const auto n = static_cast<__int128>(values.size());
  bool found = false;
  Rational best;
  int best_t = 0;
  for (int t = 0; t <= 254; ++t) {
    std::vector<int> low;
    std::vector<int> high;
    for (int v : values) (v <= t ? low : high).push_back(v);
    if (low.empty() || high.empty()) continue;
    const Rational w0 = Rational::make(static_cast<__int128>(low.size()), n);
    const Rational w1 = Rational::make(static_cast<__int128>(high.size()), n);
    const Rational mu0 = Rational::make(
        std::accumulate(low.begin(), low.end(), __int128{0}),
        static_cast<__int128>(low.size()));
    const Rational mu1 = Rational::make(
        std::accumulate(high.begin(), high.end(), __int128{0}),
        static_cast<__int128>(high.size()));
    const Rational d = mu0 - mu1;
    const Rational sigma = w0 * w1 * d * d;
    if (!found || sigma > best) {
      found = true;
      best = sigma;
      best_t = t;
    }
  }
  return found ? best_t : values.front();
}

using Cov3 = std::array<std::array<double, 3>, 3>;

// Two-pass sample covariance of arbitrary 3-vectors.
inline Cov3 sample_covariance(const std::vector<std::array<double, 3>>& xs) {
  std::array<double, 3> mean{};
  for (const auto& x : xs) {
    for (int i = 0; i < 3; ++i) mean[i] += x[i];
  }
  for (double& m : mean) m /= static_cast<double>(xs.size());
  Cov3 cov{};
  for (const auto& x : xs) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) cov[i][j] += (x[i] - mean[i]) * (x[j] - mean[j]);
    }
  }
  const double denom = xs.size() > 1 ? static_cast<double>(xs.size() - 1) : 1.0;
  for (auto& row : cov) {
    for (double& v : row) v /= denom;
  }
  return cov;
}

inline std::vector<std::array<double, 3>> pixel_vectors(const Frame& f) {
  std::vector<std::array<double, 3>> xs;
  for (std::size_t i = 0; i < f.pixel_count(); ++i) {
    const Rgb c = f.pixel(i);
    xs.push_back({double(c.r), double(c.g), double(c.b)});
  }
  return xs;
}

}  // namespace glareview::testing
