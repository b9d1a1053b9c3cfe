#include "glareview/ppm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

namespace glareview {

const char* to_string(PpmErrorKind kind) {
  switch (kind) {
    case PpmErrorKind::kBadMagic:
      return "bad-magic";
    case PpmErrorKind::kBadHeader:
      return "bad-header";
    case PpmErrorKind::kMaxvalUnsupported:
      return "maxval-unsupported";
    case PpmErrorKind::kTruncatedPayload:
      return "truncated-payload";
  }
  return "unknown";
}

PpmError::PpmError(PpmErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string("ppm ") + to_string(kind) + ": " + detail),
      kind_(kind) {}

namespace {

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::optional<std::uint64_t> number() {
    skip_space_and_comments();
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      ++pos_;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  bool at_space() const {
    return pos_ < bytes_.size() && std::isspace(bytes_[pos_]);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Frame read_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw PpmError(PpmErrorKind::kBadMagic, "expected P6 signature");
  }
  HeaderCursor cursor(bytes.subspan(2));
  if (!cursor.at_space()) {
    throw PpmError(PpmErrorKind::kBadMagic, "no whitespace after P6");
  }
  const auto width = cursor.number();
  const auto height = cursor.number();
  if (!width || !height || *width == 0 || *height == 0) {
    throw PpmError(PpmErrorKind::kBadHeader, "invalid dimensions");
  }
  const auto maxval = cursor.number();
  if (!maxval) {
    throw PpmError(PpmErrorKind::kBadHeader, "invalid maxval");
  }
  if (*maxval != 255) {
    throw PpmError(PpmErrorKind::kMaxvalUnsupported,
                   "maxval " + std::to_string(*maxval) + " (only 255)");
  }
  if (!cursor.at_space()) {
    throw PpmError(PpmErrorKind::kBadHeader, "no whitespace after maxval");
  }
  cursor.advance();

  const std::size_t offset = 2 + cursor.pos();
  const std::uint64_t need = 3ull * *width * *height;
  if (bytes.size() - offset < need) {
    throw PpmError(PpmErrorKind::kTruncatedPayload,
                   "need " + std::to_string(need) + " raster bytes, have " +
                       std::to_string(bytes.size() - offset));
  }
  std::vector<std::uint8_t> pixels(bytes.begin() + offset,
                                   bytes.begin() + offset + need);
  return Frame(static_cast<std::uint32_t>(*width),
               static_cast<std::uint32_t>(*height), std::move(pixels));
}

std::vector<std::uint8_t> write_ppm(const Frame& frame) {
  const std::string header = "P6\n" + std::to_string(frame.width()) + " " +
                             std::to_string(frame.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + frame.bytes().size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), frame.bytes().begin(), frame.bytes().end());
  return out;
}

Frame load_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_ppm(bytes);
}

void save_ppm(const std::filesystem::path& path, const Frame& frame) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto bytes = write_ppm(frame);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace glareview
