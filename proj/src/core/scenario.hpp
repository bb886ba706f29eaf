#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/attention.hpp"
#include "core/features.hpp"
#include "core/world.hpp"

namespace attentive {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<std::string> problems);
  std::vector<std::string> problems;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reading estimator used by the differencing features: per-element
// smoothing over `smoothing_frames` frames, differenced against the
// window `differencing_lag` frames earlier (dt_eff = lag * dt).
struct FeatureConfig {
  std::vector<DimensionTag> active;
  std::vector<std::string> distance_sources{"range"};  // "range" and/or "sonar"
  int smoothing_frames = 1;
  SmoothingKind smoothing_kind = SmoothingKind::Median;
  int differencing_lag = 1;
  double direction_deadband = 0.1;  // m/s
  double equal_tolerance = 0.02;    // relative band for EQUAL goals
};

struct TimedGoal {
  Goal goal;
  double t_start = 0.0;
  double t_end = 0.0;  // active on [t_start, t_end)
};

struct Scenario {
  std::string name = "scenario";
  std::uint64_t seed = 0;
  double duration = 10.0;
  double dt = 0.1;
  World world;
  NoiseModel noise;
  std::size_t window_frames = 20;
  FeatureConfig features;
  std::vector<TimedGoal> goals;
  WeightSet weights;
  ChronometryParams chronometry;
  double wta_threshold = 0.2;
  double global_gain = 1.0;
};

// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validate(const Scenario& scenario);

// Parse + validate. Throws ParseError on malformed JSON or bad field
// types, ValidationError with the full problem list otherwise.
Scenario scenario_from_json(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);  // + IoError

std::string scenario_to_json(const Scenario& scenario);

// Built-in experiment scenarios.
const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
Scenario make_preset(const std::string& name);  // throws std::out_of_range

}  // namespace attentive
