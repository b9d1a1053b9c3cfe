#include "glareview/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace glareview {

Frame make_bench_frame(std::uint32_t width, std::uint32_t height,
                       std::uint64_t seed) {
  constexpr std::uint64_t kMul = 6364136223846793005ull;
  constexpr std::uint64_t kInc = 1442695040888963407ull;
  Frame frame(width, height);
  std::uint64_t state = seed;
  for (auto& byte : frame.bytes()) {
    state = kMul * state + kInc;
    byte = static_cast<std::uint8_t>(state >> 56);
  }
  return frame;
}

bool BenchReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const MethodTiming& t) { return t.pass.value_or(true); });
}

double percentile(std::span<const double> samples, double q) {
  if (samples.empty()) return 0.0;
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

MethodTiming summarize(Method method, std::span<const double> samples_us,
                       std::uint64_t pixels_per_frame,
                       std::optional<double> budget_ms) {
  MethodTiming t;
  t.method = method;
  const double total_us =
      std::accumulate(samples_us.begin(), samples_us.end(), 0.0);
  t.mean_us = total_us / static_cast<double>(samples_us.size());
  t.p50_us = percentile(samples_us, 0.50);
  t.p95_us = percentile(samples_us, 0.95);
  // pixels per microsecond is megapixels per second.
  t.mpix_per_s = total_us > 0
                     ? static_cast<double>(pixels_per_frame) *
                           static_cast<double>(samples_us.size()) / total_us
                     : 0.0;
  if (budget_ms) t.pass = t.p95_us <= 1000.0 * *budget_ms;
  return t;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.width == 0 || config.height == 0) {
    throw ParamError("bench frame must have nonzero area");
  }
  if (config.iterations == 0) throw ParamError("bench needs >= 1 iteration");
  config.params.validate();

  using Clock = std::chrono::steady_clock;
  const Frame input = make_bench_frame(config.width, config.height);
  const std::uint64_t pixels = input.pixel_count();

  BenchReport report{config, {}};
  std::vector<double> samples(config.iterations);
  for (Method m : kAllMethods) {
    for (std::uint32_t i = 0; i < config.warmup; ++i) {
      Frame sink = enhance(input, m, config.params);
      (void)sink;
    }
    for (auto& sample : samples) {
      const auto start = Clock::now();
      Frame out = enhance(input, m, config.params);
      const auto stop = Clock::now();
      sample = std::chrono::duration<double, std::micro>(stop - start).count();
      (void)out;
    }
    report.results.push_back(summarize(m, samples, pixels, config.budget_ms));
  }
  return report;
}

nlohmann::json to_json(const BenchReport& report) {
  const auto& c = report.config;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& t : report.results) {
    nlohmann::json verdict = nullptr;
    if (t.pass) verdict = *t.pass ? "pass" : "fail";
    results.push_back({{"method", method_name(t.method)},
                       {"mean_us", t.mean_us},
                       {"p50_us", t.p50_us},
                       {"p95_us", t.p95_us},
                       {"mpix_per_s", t.mpix_per_s},
                       {"verdict", verdict}});
  }
  nlohmann::json budget = nullptr;
  if (c.budget_ms) budget = *c.budget_ms;
  return {{"width", c.width},
          {"height", c.height},
          {"iterations", c.iterations},
          {"warmup", c.warmup},
          {"stats_subsample", c.params.stats_subsample},
          {"budget_ms", budget},
          {"results", std::move(results)}};
}

}  // namespace glareview
