#pragma once

#include <array>

#include "glareview/enhance.hpp"
#include "glareview/image.hpp"

namespace glareview {

inline constexpr std::uint32_t kGridSeparator = 2;

// Tile order, row-major over a 3x2 layout.
inline constexpr std::array<Method, 6> kGridMethods = {
    Method::kHistEq,    Method::kGrayThresh, Method::kOtsu,
    Method::kRgbThresh, Method::kRgbMax,     Method::kDecorrThresh};

// Six enhancements side by side, separated by 2-pixel black gutters:
// (3w + 4) x (2h + 2).
Frame comparison_grid(const Frame& frame, const EnhanceParams& params);

// Copies tile `index` (0..5) back out of a grid built from a w x h input.
Frame grid_tile(const Frame& grid, std::uint32_t tile_width,
                std::uint32_t tile_height, std::size_t index);

}  // namespace glareview
