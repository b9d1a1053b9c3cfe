#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glareview {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
  friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

// Row-major interleaved RGB8 raster.
class Frame {
 public:
  Frame() = default;
  Frame(std::uint32_t width, std::uint32_t height, Rgb fill = {});
  // Takes ownership of an existing buffer; throws std::invalid_argument unless
  // pixels.size() == 3 * width * height.
  Frame(std::uint32_t width, std::uint32_t height,
        std::vector<std::uint8_t> pixels);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  bool empty() const { return pixel_count() == 0; }

  Rgb at(std::uint32_t x, std::uint32_t y) const {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width_ + x);
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(std::uint32_t x, std::uint32_t y, Rgb c) {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width_ + x);
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
  }
  Rgb pixel(std::size_t index) const {
    return {data_[3 * index], data_[3 * index + 1], data_[3 * index + 2]};
  }
  void set_pixel(std::size_t index, Rgb c) {
    data_[3 * index] = c.r;
    data_[3 * index + 1] = c.g;
    data_[3 * index + 2] = c.b;
  }

  std::span<const std::uint8_t> bytes() const { return data_; }
  std::span<std::uint8_t> bytes() { return data_; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Row-major 8-bit luma raster.
class GrayFrame {
 public:
  GrayFrame() = default;
  GrayFrame(std::uint32_t width, std::uint32_t height, std::uint8_t fill = 0)
      : width_(width),
        height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {}

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::size_t pixel_count() const { return data_.size(); }

  std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& at(std::uint32_t x, std::uint32_t y) {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const std::uint8_t> bytes() const { return data_; }
  std::span<std::uint8_t> bytes() { return data_; }

  friend bool operator==(const GrayFrame&, const GrayFrame&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::vector<std::uint8_t> data_;
};

struct Roi {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t w = 1;
  std::uint32_t h = 1;

  bool fits(std::uint32_t width, std::uint32_t height) const {
    return w >= 1 && h >= 1 && static_cast<std::uint64_t>(x) + w <= width &&
           static_cast<std::uint64_t>(y) + h <= height;
  }
};

class RoiError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Broadcast luma: round(0.299 R + 0.587 G + 0.114 B), evaluated exactly in
// thousandths so ties round away from zero without float error.
inline std::uint8_t luma(Rgb c) {
  const std::uint32_t scaled = 299u * c.r + 587u * c.g + 114u * c.b;
  return static_cast<std::uint8_t>((scaled + 500u) / 1000u);
}

GrayFrame to_gray(const Frame& frame);

// Population standard deviation of luma over the roi. Throws RoiError when the
// roi does not fit inside the frame.
double rms_contrast(const GrayFrame& gray, const Roi& roi);

}  // namespace glareview
