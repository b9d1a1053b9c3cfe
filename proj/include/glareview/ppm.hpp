#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "glareview/image.hpp"

namespace glareview {

enum class PpmErrorKind {
  kBadMagic,            // not "P6"
  kBadHeader,           // missing/invalid width, height or maxval token
  kMaxvalUnsupported,   // maxval other than 255
  kTruncatedPayload,    // fewer than 3*w*h raster bytes
};

const char* to_string(PpmErrorKind kind);

class PpmError : public std::runtime_error {
 public:
  PpmError(PpmErrorKind kind, const std::string& detail);
  PpmErrorKind kind() const { return kind_; }

 private:
  PpmErrorKind kind_;
};

// Binary P6, maxval 255. Header tokens may be separated by any whitespace and
// '#' comments; exactly one whitespace byte separates maxval from the raster.
Frame read_ppm(std::span<const std::uint8_t> bytes);

// Canonical form: "P6\n<w> <h>\n255\n" followed by the raw raster.
std::vector<std::uint8_t> write_ppm(const Frame& frame);

Frame load_ppm(const std::filesystem::path& path);
void save_ppm(const std::filesystem::path& path, const Frame& frame);

}  // namespace glareview
