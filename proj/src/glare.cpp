#include "glareview/glare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace glareview {

void GlareSpec::validate() const {
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw ParamError("glare strength must be in [0, 1]");
  }
  if (const auto* radial = std::get_if<RadialMask>(&mask)) {
    if (!(radial->sigma > 0.0)) throw ParamError("radial sigma must be > 0");
  }
}

double GlareSpec::mask_at(std::uint32_t x, std::uint32_t y) const {
  if (const auto* radial = std::get_if<RadialMask>(&mask)) {
    const double dx = x - radial->cx;
    const double dy = y - radial->cy;
    return std::exp(-(dx * dx + dy * dy) / (2.0 * radial->sigma * radial->sigma));
  }
  return 1.0;
}

Frame apply_glare(const Frame& frame, const GlareSpec& spec) {
  spec.validate();
  Frame out(frame.width(), frame.height());
  auto src = frame.bytes();
  auto dst = out.bytes();
  // c + g * (255 - c) equals (1 - g) c + 255 g and is monotone in g.
  auto blend = [](std::uint8_t c, double g) {
    const double v = std::round(c + g * (255.0 - c));
    return static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  };
  std::size_t k = 0;
  for (std::uint32_t y = 0; y < frame.height(); ++y) {
    for (std::uint32_t x = 0; x < frame.width(); ++x, k += 3) {
      const double g = spec.strength * spec.mask_at(x, y);
      dst[k] = blend(src[k], g);
      dst[k + 1] = blend(src[k + 1], g);
      dst[k + 2] = blend(src[k + 2], g);
    }
  }
  return out;
}

std::vector<double> sobel_magnitude(const GrayFrame& gray) {
  const auto w = static_cast<std::int64_t>(gray.width());
  const auto h = static_cast<std::int64_t>(gray.height());
  std::vector<double> mag(gray.pixel_count());
  auto px = [&](std::int64_t x, std::int64_t y) -> int {
    x = std::clamp<std::int64_t>(x, 0, w - 1);
    y = std::clamp<std::int64_t>(y, 0, h - 1);
    return gray.at(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
  };
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      const int gx = (px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1)) -
                     (px(x - 1, y - 1) + 2 * px(x - 1, y) + px(x - 1, y + 1));
      const int gy = (px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1)) -
                     (px(x - 1, y - 1) + 2 * px(x, y - 1) + px(x + 1, y - 1));
      mag[static_cast<std::size_t>(y * w + x)] =
          std::sqrt(static_cast<double>(gx * gx + gy * gy));
    }
  }
  return mag;
}

double edge_survival(const Frame& reference, const Frame& degraded, double tau) {
  if (reference.width() != degraded.width() ||
      reference.height() != degraded.height()) {
    throw DimensionError("edge_survival: frames differ in size");
  }
  if (!(tau > 0.0)) throw ParamError("edge tau must be > 0");
  const auto ref = sobel_magnitude(to_gray(reference));
  const auto deg = sobel_magnitude(to_gray(degraded));
  std::size_t strong = 0;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (ref[i] >= tau) {
      ++strong;
      kept += deg[i] >= tau;
    }
  }
  return strong == 0 ? 1.0 : static_cast<double>(kept) / strong;
}

std::size_t distinct_colors(const Frame& frame, const Roi& roi) {
  if (!roi.fits(frame.width(), frame.height())) {
    throw RoiError("roi exceeds frame");
  }
  std::vector<std::uint32_t> packed;
  packed.reserve(static_cast<std::size_t>(roi.w) * roi.h);
  for (std::uint32_t y = roi.y; y < roi.y + roi.h; ++y) {
    for (std::uint32_t x = roi.x; x < roi.x + roi.w; ++x) {
      const Rgb c = frame.at(x, y);
      packed.push_back((std::uint32_t{c.r} << 16) | (std::uint32_t{c.g} << 8) | c.b);
    }
  }
  std::sort(packed.begin(), packed.end());
  return static_cast<std::size_t>(
      std::unique(packed.begin(), packed.end()) - packed.begin());
}

VisibilityReport evaluate_methods(const Frame& frame, const Roi& roi,
                                  const GlareSpec& spec,
                                  const EnhanceParams& params) {
  params.validate();
  spec.validate();
  if (!roi.fits(frame.width(), frame.height())) {
    throw RoiError("roi exceeds frame");
  }
  VisibilityReport report{roi, spec, {}};
  for (Method m : kAllMethods) {
    const Frame enhanced = enhance(frame, m, params);
    const Frame glared = apply_glare(enhanced, spec);
    report.methods.push_back({m, rms_contrast(to_gray(glared), roi),
                              edge_survival(enhanced, glared),
                              distinct_colors(glared, roi)});
  }
  return report;
}

nlohmann::json to_json(const GlareSpec& spec) {
  nlohmann::json j = {{"strength", spec.strength}};
  if (const auto* radial = std::get_if<RadialMask>(&spec.mask)) {
    j["mask"] = "radial";
    j["cx"] = radial->cx;
    j["cy"] = radial->cy;
    j["sigma"] = radial->sigma;
  } else {
    j["mask"] = "uniform";
  }
  return j;
}

nlohmann::json to_json(const VisibilityReport& report) {
  nlohmann::json methods = nlohmann::json::array();
  for (const auto& m : report.methods) {
    methods.push_back({{"method", method_name(m.method)},
                       {"rms", m.rms},
                       {"edge_survival", m.edge_survival},
                       {"colors", m.colors}});
  }
  return {{"roi", {report.roi.x, report.roi.y, report.roi.w, report.roi.h}},
          {"glare", to_json(report.glare)},
          {"methods", std::move(methods)}};
}

}  // namespace glareview
