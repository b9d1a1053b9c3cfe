#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

#include "glareview/enhance.hpp"
#include "glareview/image.hpp"

namespace glareview {

struct UniformMask {};

// Gaussian spot centred on (cx, cy), in pixels.
struct RadialMask {
  double cx = 0;
  double cy = 0;
  double sigma = 1;
};

struct GlareSpec {
  double strength = 0;  // [0, 1]
  std::variant<UniformMask, RadialMask> mask = UniformMask{};

  // Throws ParamError.
  void validate() const;
  double mask_at(std::uint32_t x, std::uint32_t y) const;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Veiling glare: each channel blends toward white by g = strength * mask(x, y).
Frame apply_glare(const Frame& frame, const GlareSpec& spec);

inline constexpr double kDefaultEdgeTau = 32.0;

// Euclidean 3x3 Sobel magnitude of luma, replicate border.
std::vector<double> sobel_magnitude(const GrayFrame& gray);

// Fraction of the reference's strong-gradient pixels (|grad| >= tau) that are
// also strong in the degraded frame; 1.0 when the reference has none.
double edge_survival(const Frame& reference, const Frame& degraded,
                     double tau = kDefaultEdgeTau);

std::size_t distinct_colors(const Frame& frame, const Roi& roi);

struct MethodVisibility {
  Method method = Method::kPassthrough;
  double rms = 0;
  double edge_survival = 0;
  std::size_t colors = 0;
};

struct VisibilityReport {
  Roi roi;
  GlareSpec glare;
  std::vector<MethodVisibility> methods;  // wire-id order
};

VisibilityReport evaluate_methods(const Frame& frame, const Roi& roi,
                                  const GlareSpec& spec,
                                  const EnhanceParams& params);

nlohmann::json to_json(const GlareSpec& spec);
nlohmann::json to_json(const VisibilityReport& report);

}  // namespace glareview
