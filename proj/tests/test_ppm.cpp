#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "glareview/ppm.hpp"
#include "support/random_frames.hpp"

using namespace glareview;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return {s.begin(), s.end()};
}

PpmErrorKind error_kind(const std::vector<std::uint8_t>& b) {
  try {
    read_ppm(b);
  } catch (const PpmError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return PpmErrorKind::kBadMagic;
}

}  // namespace

TEST_CASE("read a 1x1 pixmap") {
  auto b = bytes_of("P6\n1 1\n255\n");
  b.insert(b.end(), {10, 20, 30});
  const Frame f = read_ppm(b);
  CHECK(f.width() == 1);
  CHECK(f.height() == 1);
  CHECK(f.at(0, 0) == Rgb{10, 20, 30});
}

TEST_CASE("header grammar tolerates comments and mixed whitespace") {
  auto b = bytes_of("P6 # made by hand\n2\t1 \n# depth\n255\n");
  b.insert(b.end(), {1, 2, 3, 4, 5, 6});
  const Frame f = read_ppm(b);
  CHECK(f.at(1, 0) == Rgb{4, 5, 6});
}

TEST_CASE("raster may start with a whitespace-valued byte") {
  auto b = bytes_of("P6\n1 1\n255\n");
  b.insert(b.end(), {'\n', ' ', '#'});
  CHECK(read_ppm(b).at(0, 0) == Rgb{'\n', ' ', '#'});
}

TEST_CASE("write produces the canonical header") {
  Frame f(3, 2, Rgb{9, 8, 7});
  const auto out = write_ppm(f);
  const std::string header(out.begin(), out.begin() + 11);
  CHECK(header == "P6\n3 2\n255\n");
  CHECK(out.size() == 11 + 18);
}

TEST_CASE("round trips are identities") {
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Frame f = testing::random_frame(rng, 40, 40);
    const auto encoded = write_ppm(f);
    const Frame decoded = read_ppm(encoded);
    REQUIRE(decoded == f);
    REQUIRE(write_ppm(decoded) == encoded);
  }
}

TEST_CASE("distinct parse errors") {
  CHECK(error_kind(bytes_of("P5\n1 1\n255\n...")) == PpmErrorKind::kBadMagic);
  CHECK(error_kind(bytes_of("")) == PpmErrorKind::kBadMagic);
  CHECK(error_kind(bytes_of("P61 1\n255\n...")) == PpmErrorKind::kBadMagic);
  CHECK(error_kind(bytes_of("P6\nx 1\n255\n...")) == PpmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P6\n0 1\n255\n")) == PpmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P6\n1 1\n")) == PpmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P6\n1 1\n255")) == PpmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P6\n1 1\n65535\n......")) ==
        PpmErrorKind::kMaxvalUnsupported);
  CHECK(error_kind(bytes_of("P6\n1 1\n15\n...")) == PpmErrorKind::kMaxvalUnsupported);
  CHECK(error_kind(bytes_of("P6\n2 2\n255\n0123456789")) ==
        PpmErrorKind::kTruncatedPayload);
}

TEST_CASE("error messages name the failure") {
  try {
    read_ppm(bytes_of("P6\n1 1\n65535\n"));
    FAIL("no throw");
  } catch (const PpmError& e) {
    CHECK(std::string(e.what()).find("maxval-unsupported") != std::string::npos);
  }
}
