// attentive command-line front end. Talks to the engine exclusively
// through the C API in attentive/attentive.h.
//
// Exit codes: 0 success, 2 parse/validation/usage error, 1 I/O error.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "attentive/attentive.h"

namespace {

int exit_code_for(atn_status status) {
  switch (status) {
    case ATN_OK: return 0;
    case ATN_ERROR_IO: return 1;
    default: return 2;
  }
}

struct ScenarioDeleter {
  void operator()(atn_scenario* s) const { atn_scenario_free(s); }
};
struct TraceDeleter {
  void operator()(atn_trace* t) const { atn_trace_free(t); }
};

using ScenarioPtr = std::unique_ptr<atn_scenario, ScenarioDeleter>;
using TracePtr = std::unique_ptr<atn_trace, TraceDeleter>;

int load_scenario(const std::string& scenario_path, const std::string& preset, ScenarioPtr& out) {
  atn_scenario* raw = nullptr;
  atn_status status;
  if (!preset.empty()) {
    status = atn_scenario_from_preset(preset.c_str(), &raw);
  } else {
    status = atn_scenario_load_file(scenario_path.c_str(), &raw);
  }
  if (status != ATN_OK) {
    std::fprintf(stderr, "error: %s\n", atn_last_error());
    return exit_code_for(status);
  }
  out.reset(raw);
  return 0;
}

int cmd_run(const std::string& scenario_path, const std::string& preset, bool has_seed,
            uint64_t seed, const std::string& out_dir, bool no_noise, bool has_threshold,
            double threshold) {
  ScenarioPtr scenario;
  if (int rc = load_scenario(scenario_path, preset, scenario)) return rc;

  if (has_seed) atn_scenario_set_seed(scenario.get(), seed);
  if (no_noise) atn_scenario_set_noise_enabled(scenario.get(), 0);
  if (has_threshold) {
    if (atn_scenario_set_wta_threshold(scenario.get(), threshold) != ATN_OK) {
      std::fprintf(stderr, "error: %s\n", atn_last_error());
      return 2;
    }
  }

  atn_trace* raw_trace = nullptr;
  atn_status status = atn_run(scenario.get(), &raw_trace);
  if (status != ATN_OK) {
    std::fprintf(stderr, "error: %s\n", atn_last_error());
    return exit_code_for(status);
  }
  TracePtr trace(raw_trace);

  const size_t ticks = atn_trace_tick_count(trace.get());
  const size_t winners = atn_trace_winner_count(trace.get());
  std::printf("ran %zu ticks, %zu winner events\n", ticks, winners);
  if (winners > 0) {
    atn_winner first{};
    atn_trace_get_winner(trace.get(), 0, &first);
    std::printf("first winner: t=%.3fs sector=%d saliency=%.4f source=%s\n", first.time_s,
                first.sector, first.saliency, first.top_down ? "top_down" : "bottom_up");
  }

  if (!out_dir.empty()) {
    status = atn_trace_export_csv(trace.get(), out_dir.c_str());
    if (status != ATN_OK) {
      std::fprintf(stderr, "error: %s\n", atn_last_error());
      return exit_code_for(status);
    }
    std::printf("trace exported to %s\n", out_dir.c_str());
  }
  return 0;
}

int cmd_validate(const std::string& scenario_path) {
  ScenarioPtr scenario;
  if (int rc = load_scenario(scenario_path, "", scenario)) return rc;
  const atn_status status = atn_scenario_validate(scenario.get());
  if (status != ATN_OK) {
    std::fprintf(stderr, "error: %s\n", atn_last_error());
    return exit_code_for(status);
  }
  std::printf("%s: OK\n", scenario_path.c_str());
  return 0;
}

int cmd_list_presets() {
  for (size_t i = 0; i < atn_preset_count(); ++i) std::printf("%s\n", atn_preset_name(i));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attentive - multi-sensor attention simulation"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string preset;
  std::string out_dir;
  uint64_t seed = 0;
  double threshold = 0.0;
  bool no_noise = false;

  auto* run = app.add_subcommand("run", "run a scenario and optionally export its trace");
  auto* scenario_opt = run->add_option("--scenario", scenario_path, "scenario JSON file");
  auto* preset_opt = run->add_option("--preset", preset, "built-in scenario name");
  scenario_opt->excludes(preset_opt);
  auto* seed_opt = run->add_option("--seed", seed, "override the scenario seed");
  run->add_option("--out-dir", out_dir, "directory for CSV trace export");
  run->add_flag("--no-noise", no_noise, "disable sensor noise");
  auto* threshold_opt = run->add_option("--threshold", threshold, "override the WTA threshold");

  auto* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("--scenario", scenario_path, "scenario JSON file")->required();

  auto* list = app.add_subcommand("list-presets", "print the built-in scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    if (scenario_path.empty() && preset.empty()) {
      std::fprintf(stderr, "error: run requires --scenario or --preset\n");
      return 2;
    }
    return cmd_run(scenario_path, preset, seed_opt->count() > 0, seed, out_dir, no_noise,
                   threshold_opt->count() > 0, threshold);
  }
  if (validate->parsed()) return cmd_validate(scenario_path);
  if (list->parsed()) return cmd_list_presets();
  return 2;
}
