#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "glareview/image.hpp"

namespace glareview {

// Wire ids are the enumerator values.
enum class Method : std::uint8_t {
  kPassthrough = 0,
  kHistEq = 1,
  kGrayThresh = 2,
  kOtsu = 3,
  kRgbThresh = 4,
  kRgbMax = 5,
  kDecorrThresh = 6,
};

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::kPassthrough, Method::kHistEq,   Method::kGrayThresh,
    Method::kOtsu,        Method::kRgbThresh, Method::kRgbMax,
    Method::kDecorrThresh};

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);
std::optional<Method> method_from_id(std::uint32_t id);
inline std::uint8_t method_id(Method m) { return static_cast<std::uint8_t>(m); }

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EnhanceParams {
  std::uint32_t midpoint = 128;
  // Stride, in both axes, of the grid used for global statistics (Otsu
  // histogram, PCA covariance). Thresholding always visits every pixel.
  std::uint32_t stats_subsample = 1;
  // Principal components with variance at or below this are never "high".
  double var_epsilon = 1e-9;

  // Throws ParamError.
  void validate() const;
};

struct PcaBasis {
  std::array<double, 3> mean{};
  // Descending.
  std::array<double, 3> eigenvalues{};
  // Rows are unit eigenvectors; each row's largest-magnitude component (the
  // first, on ties) is positive.
  std::array<std::array<double, 3>, 3> eigenvectors{};
};

Frame enhance(const Frame& frame, Method method, const EnhanceParams& params);

Frame gray_threshold(const Frame& frame, const EnhanceParams& params);

// Two-class Otsu level t: luma <= t is the dark class. Histogram is gathered
// on the stats_subsample grid. A single-valued histogram reports that value.
std::uint8_t otsu_level(const GrayFrame& gray, std::uint32_t stats_subsample = 1);
Frame otsu_threshold(const Frame& frame, const EnhanceParams& params);

// Luma equalization table m(v); identity when the frame holds one luma value.
std::array<std::uint8_t, 256> equalization_map(const GrayFrame& gray);
Frame hist_equalize(const Frame& frame, const EnhanceParams& params);

Frame rgb_threshold(const Frame& frame, const EnhanceParams& params);
Frame rgb_max(const Frame& frame, const EnhanceParams& params);

PcaBasis compute_pca_basis(const Frame& frame, const EnhanceParams& params);
// Projection of a pixel's mean-centered color onto the basis rows.
std::array<double, 3> project(const PcaBasis& basis, Rgb c);
Frame decorr_threshold(const Frame& frame, const EnhanceParams& params);

}  // namespace glareview
