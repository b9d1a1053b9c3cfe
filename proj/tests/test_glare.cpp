#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glareview/glare.hpp"
#include "support/random_frames.hpp"

using namespace glareview;

namespace {

GlareSpec uniform(double g) { return {g, UniformMask{}}; }

Frame vertical_step(std::uint32_t w, std::uint32_t h) {
  Frame f(w, h);
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = w / 2; x < w; ++x) f.set(x, y, {255, 255, 255});
  }
  return f;
}

Frame gray_halves(std::uint32_t w, std::uint32_t h, std::uint8_t lo, std::uint8_t hi) {
  Frame f(w, h, Rgb{lo, lo, lo});
  for (std::uint32_t y = 0; y < h; ++y) {
    for (std::uint32_t x = w / 2; x < w; ++x) f.set(x, y, {hi, hi, hi});
  }
  return f;
}

}  // namespace

TEST_CASE("apply_glare endpoints") {
  std::mt19937 rng(1);
  const Frame f = testing::random_frame(rng, 20, 20);
  CHECK(apply_glare(f, uniform(0.0)) == f);
  CHECK(apply_glare(f, uniform(1.0)) == Frame(f.width(), f.height(), Rgb{255, 255, 255}));
  CHECK(apply_glare(Frame(1, 1), uniform(0.5)).at(0, 0) == Rgb{128, 128, 128});
}

TEST_CASE("radial mask peaks at its centre and decays") {
  GlareSpec spec{1.0, RadialMask{5, 5, 2}};
  CHECK(spec.mask_at(5, 5) == 1.0);
  CHECK(spec.mask_at(7, 5) == doctest::Approx(std::exp(-0.5)));
  const Frame out = apply_glare(Frame(11, 11), spec);
  CHECK(out.at(5, 5) == Rgb{255, 255, 255});
  CHECK(out.at(0, 0).r < out.at(3, 3).r);
  CHECK(out.at(10, 10) == out.at(0, 0));
}

TEST_CASE("glare spec validation") {
  CHECK_THROWS_AS(apply_glare(Frame(1, 1), uniform(1.5)), ParamError);
  CHECK_THROWS_AS(apply_glare(Frame(1, 1), uniform(-0.1)), ParamError);
  CHECK_THROWS_AS(apply_glare(Frame(1, 1), GlareSpec{0.5, RadialMask{0, 0, 0}}),
                  ParamError);
}

TEST_CASE("glare is monotone in strength per channel") {
  std::mt19937 rng(2);
  const Frame f = testing::random_frame(rng, 16, 16);
  Frame prev = f;
  for (int step = 1; step <= 100; ++step) {
    const Frame cur = apply_glare(f, uniform(step / 100.0));
    for (std::size_t k = 0; k < cur.bytes().size(); ++k) {
      REQUIRE(cur.bytes()[k] >= prev.bytes()[k]);
    }
    prev = cur;
  }
  const GlareSpec a{0.3, RadialMask{4, 4, 3}};
  const GlareSpec b{0.6, RadialMask{4, 4, 3}};
  const Frame fa = apply_glare(f, a);
  const Frame fb = apply_glare(f, b);
  for (std::size_t k = 0; k < fa.bytes().size(); ++k) REQUIRE(fb.bytes()[k] >= fa.bytes()[k]);
}

TEST_CASE("sobel magnitude at a step edge") {
  const auto mag = sobel_magnitude(to_gray(vertical_step(6, 3)));
  // Columns 2 and 3 straddle the step: |gx| = 4 * 255.
  CHECK(mag[1 * 6 + 2] == 1020.0);
  CHECK(mag[1 * 6 + 3] == 1020.0);
  CHECK(mag[1 * 6 + 0] == 0.0);
  CHECK(mag[0 * 6 + 5] == 0.0);
}

TEST_CASE("edge survival") {
  const Frame step = vertical_step(8, 8);
  CHECK(edge_survival(step, step) == 1.0);
  CHECK(edge_survival(step, Frame(8, 8, Rgb{40, 40, 40})) == 0.0);
  CHECK(edge_survival(step, apply_glare(step, uniform(0.5))) == 1.0);
  CHECK(edge_survival(Frame(4, 4), Frame(4, 4, Rgb{9, 9, 9})) == 1.0);
  CHECK(edge_survival(step, apply_glare(step, uniform(0.99))) == 0.0);
  CHECK_THROWS_AS(edge_survival(step, Frame(8, 7)), DimensionError);
  CHECK_THROWS_AS(edge_survival(step, step, 0.0), ParamError);
}

TEST_CASE("distinct colors inside a roi") {
  Frame f(4, 1);
  f.set(1, 0, {1, 2, 3});
  f.set(2, 0, {1, 2, 3});
  f.set(3, 0, {9, 9, 9});
  CHECK(distinct_colors(f, {0, 0, 4, 1}) == 3);
  CHECK(distinct_colors(f, {1, 0, 2, 1}) == 1);
  CHECK_THROWS_AS(distinct_colors(f, {3, 0, 2, 1}), RoiError);
}

TEST_CASE("evaluate_methods") {
  const EnhanceParams params;
  SUBCASE("zero glare reports the enhanced contrast") {
    std::mt19937 rng(3);
    Frame f(24, 24);
    for (auto& b : f.bytes()) b = static_cast<std::uint8_t>(rng());
    const Roi roi{2, 3, 10, 12};
    const auto report = evaluate_methods(f, roi, uniform(0.0), params);
    REQUIRE(report.methods.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) {
      const auto& entry = report.methods[i];
      CHECK(entry.method == kAllMethods[i]);
      CHECK(entry.rms == rms_contrast(to_gray(enhance(f, entry.method, params)), roi));
      CHECK(entry.edge_survival == 1.0);
      CHECK(entry.colors >= 1);
    }
  }
  SUBCASE("gray threshold on black/white halves scales by 1 - g") {
    const Frame f = gray_halves(16, 8, 0, 255);
    for (double g : {0.1, 0.25, 0.5, 0.8}) {
      const auto report = evaluate_methods(f, {4, 0, 8, 8}, uniform(g), params);
      const auto& gray = report.methods[method_id(Method::kGrayThresh)];
      CHECK(std::abs(gray.rms - (1 - g) * 127.5) <= 1.0);
      CHECK(gray.colors == 2);
    }
  }
  SUBCASE("thresholding beats passthrough on a low-contrast roi") {
    const Frame f = gray_halves(16, 8, 100, 160);
    const auto report = evaluate_methods(f, {0, 0, 16, 8}, uniform(0.4), params);
    const auto& pass = report.methods[method_id(Method::kPassthrough)];
    const auto& gray = report.methods[method_id(Method::kGrayThresh)];
    CHECK(gray.rms > pass.rms);
    CHECK(pass.rms == doctest::Approx(0.6 * 30).epsilon(0.05));
  }
  SUBCASE("bad roi") {
    CHECK_THROWS_AS(evaluate_methods(Frame(4, 4), {0, 0, 5, 1}, uniform(0.1), params),
                    RoiError);
  }
}

TEST_CASE("visibility report json layout") {
  const Frame f = gray_halves(8, 4, 0, 255);
  const auto report =
      evaluate_methods(f, {0, 0, 8, 4}, GlareSpec{0.2, RadialMask{4, 2, 3}}, {});
  const auto j = to_json(report);
  CHECK(j["roi"] == nlohmann::json::array({0, 0, 8, 4}));
  CHECK(j["glare"]["mask"] == "radial");
  CHECK(j["glare"]["sigma"] == 3.0);
  CHECK(j["glare"]["strength"] == 0.2);
  REQUIRE(j["methods"].size() == 7);
  CHECK(j["methods"][0]["method"] == "passthrough");
  CHECK(j["methods"][6]["method"] == "decorr-thresh");
  for (const auto& m : j["methods"]) {
    CHECK(m.contains("rms"));
    CHECK(m["edge_survival"].get<double>() >= 0.0);
    CHECK(m["edge_survival"].get<double>() <= 1.0);
    CHECK(m["colors"].get<int>() >= 1);
  }
  CHECK(to_json(GlareSpec{0.5, UniformMask{}}) ==
        nlohmann::json{{"strength", 0.5}, {"mask", "uniform"}});
}
