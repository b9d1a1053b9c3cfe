#include "glareview/grid.hpp"

namespace glareview {

namespace {

struct Origin {
  std::uint32_t x;
  std::uint32_t y;
};

Origin tile_origin(std::uint32_t w, std::uint32_t h, std::size_t index) {
  const auto col = static_cast<std::uint32_t>(index % 3);
  const auto row = static_cast<std::uint32_t>(index / 3);
  return {col * (w + kGridSeparator), row * (h + kGridSeparator)};
}

}  // namespace

Frame comparison_grid(const Frame& frame, const EnhanceParams& params) {
  const std::uint32_t w = frame.width();
  const std::uint32_t h = frame.height();
  Frame grid(3 * w + 2 * kGridSeparator, 2 * h + kGridSeparator);
  for (std::size_t i = 0; i < kGridMethods.size(); ++i) {
    const Frame tile = enhance(frame, kGridMethods[i], params);
    const Origin o = tile_origin(w, h, i);
    for (std::uint32_t y = 0; y < h; ++y) {
      for (std::uint32_t x = 0; x < w; ++x) grid.set(o.x + x, o.y + y, tile.at(x, y));
    }
  }
  return grid;
}

Frame grid_tile(const Frame& grid, std::uint32_t w, std::uint32_t h,
                std::size_t index) {
  const Origin o = tile_origin(w, h, index);
  Frame tile(w, h);
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = 0; x < w; ++x) tile.set(x, y, grid.at(o.x + x, o.y + y));
  }
  return tile;
}

}  // namespace glareview
