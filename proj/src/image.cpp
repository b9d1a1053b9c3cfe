#include "glareview/image.hpp"

#include <cmath>

namespace glareview {

Frame::Frame(std::uint32_t width, std::uint32_t height, Rgb fill)
    : width_(width), height_(height), data_(3 * pixel_count()) {
  for (std::size_t i = 0; i < pixel_count(); ++i) set_pixel(i, fill);
}

Frame::Frame(std::uint32_t width, std::uint32_t height,
             std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), data_(std::move(pixels)) {
  if (data_.size() != 3 * pixel_count()) {
    throw std::invalid_argument("frame buffer length " +
                                std::to_string(data_.size()) +
                                " does not match 3*" + std::to_string(width) +
                                "*" + std::to_string(height));
  }
}

GrayFrame to_gray(const Frame& frame) {
  GrayFrame gray(frame.width(), frame.height());
  auto out = gray.bytes();
  for (std::size_t i = 0; i < frame.pixel_count(); ++i) {
    out[i] = luma(frame.pixel(i));
  }
  return gray;
}

double rms_contrast(const GrayFrame& gray, const Roi& roi) {
  if (!roi.fits(gray.width(), gray.height())) {
    throw RoiError("roi " + std::to_string(roi.x) + "," +
                   std::to_string(roi.y) + "," + std::to_string(roi.w) + "," +
                   std::to_string(roi.h) + " exceeds " +
                   std::to_string(gray.width()) + "x" +
                   std::to_string(gray.height()) + " frame");
  }
  // Integer moments keep the result independent of pixel order.
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (std::uint32_t y = roi.y; y < roi.y + roi.h; ++y) {
    for (std::uint32_t x = roi.x; x < roi.x + roi.w; ++x) {
      const std::uint64_t v = gray.at(x, y);
      sum += v;
      sum_sq += v * v;
    }
  }
  const auto n = static_cast<std::uint64_t>(roi.w) * roi.h;
  // n^2 * var = n * sum_sq - sum^2, exact in 128 bits.
  const unsigned __int128 scaled =
      static_cast<unsigned __int128>(n) * sum_sq -
      static_cast<unsigned __int128>(sum) * sum;
  return std::sqrt(static_cast<double>(scaled)) / static_cast<double>(n);
}

}  // namespace glareview
