// glareview: batch enhancement, comparison grids, glare evaluation,
// benchmarking and the live frame service.

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glareview/bench.hpp"
#include "glareview/enhance.hpp"
#include "glareview/glare.hpp"
#include "glareview/grid.hpp"
#include "glareview/ppm.hpp"
#include "glareview/service.hpp"

namespace gv = glareview;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBudgetFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> method_names() {
  std::vector<std::string> names;
  for (gv::Method m : gv::kAllMethods) names.emplace_back(gv::method_name(m));
  return names;
}

struct GlareFlags {
  double strength = 0.0;
  std::string mask = "uniform";
  std::optional<double> cx;
  std::optional<double> cy;
  std::optional<double> sigma;

  void add_to(CLI::App* cmd, bool strength_required) {
    auto* s = cmd->add_option("--strength", strength, "Glare strength in [0, 1]")
                  ->check(CLI::Range(0.0, 1.0));
    if (strength_required) s->required();
    cmd->add_option("--mask", mask, "Glare mask shape")
        ->check(CLI::IsMember({"uniform", "radial"}));
    cmd->add_option("--cx", cx, "Radial centre x (default: frame centre)");
    cmd->add_option("--cy", cy, "Radial centre y (default: frame centre)");
    cmd->add_option("--sigma", sigma,
                    "Radial sigma in pixels (default: min(w, h) / 4)")
        ->check(CLI::PositiveNumber);
  }

  gv::GlareSpec to_spec(const gv::Frame& frame) const {
    gv::GlareSpec spec;
    spec.strength = strength;
    if (mask == "radial") {
      spec.mask = gv::RadialMask{
          cx.value_or(frame.width() / 2.0), cy.value_or(frame.height() / 2.0),
          sigma.value_or(std::min(frame.width(), frame.height()) / 4.0)};
    }
    return spec;
  }
};

gv::Roi parse_roi(const std::string& text) {
  std::vector<std::uint32_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad roi: " + text);
    parts.push_back(static_cast<std::uint32_t>(v));
  }
  if (parts.size() != 4) throw std::invalid_argument("roi must be x,y,w,h");
  return {parts[0], parts[1], parts[2], parts[3]};
}

double parse_budget(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size() || !(v > 0.0)) {
    throw std::invalid_argument("--budget-ms must be a positive number");
  }
  return v;
}

void check_output_path(const std::filesystem::path& out) {
  const auto parent = out.parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    throw std::runtime_error("output directory does not exist: " +
                             parent.string());
  }
}

void write_stdout_json(const nlohmann::json& j) {
  std::cout << j.dump(2) << '\n';
}

int run_serve(const gv::ServiceConfig& config) {
  // Workers inherit the blocked mask; the main thread waits for the signal.
  // Background launches may start with SIGINT ignored, which would discard it.
  std::signal(SIGINT, SIG_DFL);
  std::signal(SIGTERM, SIG_DFL);
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  gv::FrameService service(config);
  service.start();
  std::cout << "listening on " << service.url() << std::endl;

  int received = 0;
  sigwait(&signals, &received);
  service.stop();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Viewfinder posterization engine"};
  app.require_subcommand(1);

  std::string method_name;
  std::string input;
  std::string output;
  gv::EnhanceParams params;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--midpoint", params.midpoint, "Threshold level")
        ->check(CLI::Range(1, 255));
    cmd->add_option("--subsample", params.stats_subsample,
                    "Stride for global statistics")
        ->check(CLI::PositiveNumber);
  };

  auto* enhance_cmd = app.add_subcommand("enhance", "Enhance one P6 image");
  enhance_cmd->add_option("--method", method_name, "Enhancement method")
      ->required()
      ->check(CLI::IsMember(method_names()));
  enhance_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  enhance_cmd->add_option("--output", output)->required();
  add_params(enhance_cmd);

  auto* grid_cmd = app.add_subcommand("grid", "2x3 montage of all methods");
  grid_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  grid_cmd->add_option("--output", output)->required();
  add_params(grid_cmd);

  GlareFlags glare;
  auto* glare_cmd = app.add_subcommand("glare", "Simulate display glare");
  glare_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  glare_cmd->add_option("--output", output)->required();
  glare.add_to(glare_cmd, true);

  std::string roi_text;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score every method under glare (JSON)");
  evaluate_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--roi", roi_text, "x,y,w,h")->required();
  glare.add_to(evaluate_cmd, true);
  add_params(evaluate_cmd);

  gv::BenchConfig bench;
  std::vector<std::string> budget_values;
  auto* bench_cmd = app.add_subcommand("bench", "Latency benchmark (JSON)");
  bench_cmd->add_option("--width", bench.width)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--height", bench.height)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--iters", bench.iterations)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--warmup", bench.warmup);
  auto* budget_opt =
      bench_cmd
          ->add_option("--budget-ms", budget_values,
                       "p95 budget in ms (33 when given without a value)")
          ->expected(0, 1);
  add_params(bench_cmd);

  gv::ServiceConfig service;
  auto* serve_cmd = app.add_subcommand("serve", "Run the WebSocket frame service");
  serve_cmd->add_option("--port", service.port);
  serve_cmd->add_option("--bind", service.address, "Listen address");
  add_params(serve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*enhance_cmd) {
      check_output_path(output);
      const gv::Frame frame = gv::load_ppm(input);
      const auto method = *gv::method_from_name(method_name);
      gv::save_ppm(output, gv::enhance(frame, method, params));
    } else if (*grid_cmd) {
      check_output_path(output);
      gv::save_ppm(output, gv::comparison_grid(gv::load_ppm(input), params));
    } else if (*glare_cmd) {
      check_output_path(output);
      const gv::Frame frame = gv::load_ppm(input);
      gv::save_ppm(output, gv::apply_glare(frame, glare.to_spec(frame)));
    } else if (*evaluate_cmd) {
      const gv::Roi roi = parse_roi(roi_text);
      const gv::Frame frame = gv::load_ppm(input);
      write_stdout_json(gv::to_json(
          gv::evaluate_methods(frame, roi, glare.to_spec(frame), params)));
    } else if (*bench_cmd) {
      if (budget_opt->count() > 0) {
        bench.budget_ms = gv::kDefaultBudgetMs;
        if (!budget_values.empty() && !budget_values.front().empty()) {
          bench.budget_ms = parse_budget(budget_values.front());
        }
      }
      bench.params = params;
      const gv::BenchReport report = gv::run_bench(bench);
      write_stdout_json(gv::to_json(report));
      return report.all_pass() ? kExitOk : kExitBudgetFail;
    } else if (*serve_cmd) {
      service.params = params;
      return run_serve(service);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
