#include "glareview/enhance.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace glareview {

namespace {

constexpr std::array<std::string_view, 7> kNames = {
    "passthrough", "histeq",  "gray-thresh",  "otsu",
    "rgb-thresh",  "rgb-max", "decorr-thresh"};

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};

template <typename PixelFn>
Frame map_pixels(const Frame& frame, PixelFn fn) {
  Frame out(frame.width(), frame.height());
  for (std::size_t i = 0; i < frame.pixel_count(); ++i) {
    out.set_pixel(i, fn(frame.pixel(i)));
  }
  return out;
}

}  // namespace

std::string_view method_name(Method m) { return kNames.at(method_id(m)); }

std::optional<Method> method_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Method>(i);
  }
  return std::nullopt;
}

std::optional<Method> method_from_id(std::uint32_t id) {
  if (id >= kAllMethods.size()) return std::nullopt;
  return static_cast<Method>(id);
}

void EnhanceParams::validate() const {
  if (midpoint < 1 || midpoint > 255) {
    throw ParamError("midpoint must be in [1, 255], got " +
                     std::to_string(midpoint));
  }
  if (stats_subsample < 1) {
    throw ParamError("stats_subsample must be >= 1");
  }
  if (!(var_epsilon > 0.0)) {
    throw ParamError("var_epsilon must be > 0");
  }
}

Frame enhance(const Frame& frame, Method method, const EnhanceParams& params) {
  params.validate();
  switch (method) {
    case Method::kPassthrough:
      return frame;
    case Method::kHistEq:
      return hist_equalize(frame, params);
    case Method::kGrayThresh:
      return gray_threshold(frame, params);
    case Method::kOtsu:
      return otsu_threshold(frame, params);
    case Method::kRgbThresh:
      return rgb_threshold(frame, params);
    case Method::kRgbMax:
      return rgb_max(frame, params);
    case Method::kDecorrThresh:
      return decorr_threshold(frame, params);
  }
  throw ParamError("unknown method id " + std::to_string(method_id(method)));
}

Frame gray_threshold(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  const auto mid = params.midpoint;
  return map_pixels(frame,
                    [mid](Rgb p) { return luma(p) >= mid ? kWhite : kBlack; });
}

std::uint8_t otsu_level(const GrayFrame& gray, std::uint32_t stride) {
  if (stride < 1) throw ParamError("stats_subsample must be >= 1");
  std::array<std::uint64_t, 256> hist{};
  for (std::uint32_t y = 0; y < gray.height(); y += stride) {
    for (std::uint32_t x = 0; x < gray.width(); x += stride) {
      ++hist[gray.at(x, y)];
    }
  }

  std::uint64_t total = 0;
  std::uint64_t total_sum = 0;
  for (std::uint32_t v = 0; v < 256; ++v) {
    total += hist[v];
    total_sum += v * hist[v];
  }

  // sigma_b^2 is proportional to (S0*n1 - S1*n0)^2 / (n0*n1); the integer
  // difference is exact, so equal class splits give equal scores and the
  // strict comparison keeps the smallest maximizing level.
  std::uint64_t n0 = 0;
  std::uint64_t s0 = 0;
  long double best = -1.0L;
  int level = -1;
  for (int t = 0; t < 255; ++t) {
    n0 += hist[t];
    s0 += static_cast<std::uint64_t>(t) * hist[t];
    const std::uint64_t n1 = total - n0;
    if (n0 == 0 || n1 == 0) continue;
    const std::uint64_t s1 = total_sum - s0;
    const auto diff = static_cast<long double>(
        static_cast<std::int64_t>(s0 * n1) - static_cast<std::int64_t>(s1 * n0));
    const long double score =
        diff * diff / (static_cast<long double>(n0) * static_cast<long double>(n1));
    if (score > best) {
      best = score;
      level = t;
    }
  }
  if (level >= 0) return static_cast<std::uint8_t>(level);

  // Single class: report the occupied value.
  for (int v = 0; v < 256; ++v) {
    if (hist[v] != 0) return static_cast<std::uint8_t>(v);
  }
  return 0;
}

Frame otsu_threshold(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  const GrayFrame gray = to_gray(frame);
  const std::uint8_t level = otsu_level(gray, params.stats_subsample);
  Frame out(frame.width(), frame.height());
  auto src = gray.bytes();
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.set_pixel(i, src[i] <= level ? kBlack : kWhite);
  }
  return out;
}

std::array<std::uint8_t, 256> equalization_map(const GrayFrame& gray) {
  std::array<std::uint64_t, 256> cdf{};
  for (std::uint8_t v : gray.bytes()) ++cdf[v];
  std::size_t distinct = 0;
  for (auto c : cdf) distinct += c != 0;
  for (int v = 1; v < 256; ++v) cdf[v] += cdf[v - 1];

  std::array<std::uint8_t, 256> map{};
  if (distinct <= 1) {
    for (int v = 0; v < 256; ++v) map[v] = static_cast<std::uint8_t>(v);
    return map;
  }
  const std::uint64_t n = cdf[255];
  const std::uint64_t cdf_min = *std::find_if(
      cdf.begin(), cdf.end(), [](std::uint64_t c) { return c != 0; });
  const std::uint64_t den = n - cdf_min;
  for (int v = 0; v < 256; ++v) {
    if (cdf[v] < cdf_min) continue;  // below the darkest occupied level
    const std::uint64_t num = 255 * (cdf[v] - cdf_min);
    map[v] = static_cast<std::uint8_t>((2 * num + den) / (2 * den));
  }
  return map;
}

Frame hist_equalize(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  const GrayFrame gray = to_gray(frame);
  const auto map = equalization_map(gray);
  const auto luma_bytes = gray.bytes();
  if (std::adjacent_find(luma_bytes.begin(), luma_bytes.end(),
                         std::not_equal_to<>()) == luma_bytes.end()) {
    return frame;  // single luma level: identity mapping
  }

  Frame out(frame.width(), frame.height());
  auto src = gray.bytes();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::uint32_t y = src[i];
    const std::uint32_t target = map[y];
    if (y == 0) {
      const auto t = static_cast<std::uint8_t>(target);
      out.set_pixel(i, {t, t, t});
      continue;
    }
    // round(c * m(Y) / Y), halves away from zero, clamped.
    auto scale = [&](std::uint8_t c) {
      const std::uint32_t v = (2 * c * target + y) / (2 * y);
      return static_cast<std::uint8_t>(std::min<std::uint32_t>(v, 255));
    };
    const Rgb p = frame.pixel(i);
    out.set_pixel(i, {scale(p.r), scale(p.g), scale(p.b)});
  }
  return out;
}

Frame rgb_threshold(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  const auto mid = params.midpoint;
  Frame out(frame.width(), frame.height());
  auto src = frame.bytes();
  auto dst = out.bytes();
  for (std::size_t k = 0; k < src.size(); ++k) {
    dst[k] = src[k] >= mid ? 255 : 0;
  }
  return out;
}

Frame rgb_max(const Frame& frame, const EnhanceParams& params) {
  params.validate();
  return map_pixels(frame, [](Rgb p) -> Rgb {
    if (p.r >= p.g && p.r >= p.b) return {255, 0, 0};
    if (p.g >= p.b) return {0, 255, 0};
    return {0, 0, 255};
  });
}

}  // namespace glareview
