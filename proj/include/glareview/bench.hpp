#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "glareview/enhance.hpp"
#include "glareview/image.hpp"

namespace glareview {

inline constexpr std::uint64_t kBenchSeed = 0x5EED;
inline constexpr double kDefaultBudgetMs = 33.0;

// Deterministic input: a 64-bit LCG (a = 6364136223846793005,
// c = 1442695040888963407) seeded with kBenchSeed, stepped once per channel
// byte; each byte is the top 8 bits of the new state.
Frame make_bench_frame(std::uint32_t width, std::uint32_t height,
                       std::uint64_t seed = kBenchSeed);

struct BenchConfig {
  std::uint32_t width = 480;
  std::uint32_t height = 800;
  std::uint32_t iterations = 100;
  std::uint32_t warmup = 10;
  EnhanceParams params;
  std::optional<double> budget_ms;
};

struct MethodTiming {
  Method method = Method::kPassthrough;
  double mean_us = 0;
  double p50_us = 0;
  double p95_us = 0;
  double mpix_per_s = 0;
  std::optional<bool> pass;  // set when a budget was given
};

struct BenchReport {
  BenchConfig config;
  std::vector<MethodTiming> results;  // wire-id order

  bool all_pass() const;
};

// Nearest-rank percentile (q in (0, 1]) of unsorted samples.
double percentile(std::span<const double> samples, double q);

// Summarizes timed samples (microseconds) for one method.
MethodTiming summarize(Method method, std::span<const double> samples_us,
                       std::uint64_t pixels_per_frame,
                       std::optional<double> budget_ms);

// Throws ParamError for a zero-area frame or zero iterations.
BenchReport run_bench(const BenchConfig& config);

nlohmann::json to_json(const BenchReport& report);

}  // namespace glareview
