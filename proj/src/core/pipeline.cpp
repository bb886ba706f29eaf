#include "core/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace attentive {

namespace {
constexpr uint64_t kSonarStream = 1;
constexpr uint64_t kRangeStream = 2;
}  // namespace

Pipeline::Pipeline(const Scenario& scenario)
    : scenario_(scenario),
      world_(scenario.world),
      sonar_rng_(scenario.seed, kSonarStream),
      range_rng_(scenario.seed, kRangeStream),
      window_(scenario.window_frames) {
  world_.dt = scenario_.dt;
  // Initial observation at t=0 so differencing is available from tick 1.
  window_.push(sample_sonar(world_, scenario_.noise, sonar_rng_),
               sample_range(world_, scenario_.noise, range_rng_));
}

std::optional<Goal> Pipeline::active_goal(GoalQuantity quantity, double time) const {
  for (const TimedGoal& tg : scenario_.goals) {
    if (tg.goal.quantity != quantity) continue;
    if (time >= tg.t_start && time < tg.t_end) return tg.goal;
  }
  return std::nullopt;
}

std::vector<FeatureMap> Pipeline::compute_maps(RawKinematics& kin) {
  const FeatureConfig& cfg = scenario_.features;
  const auto active = [&](DimensionTag tag) {
    return std::find(cfg.active.begin(), cfg.active.end(), tag) != cfg.active.end();
  };
  const std::size_t m = static_cast<std::size_t>(cfg.smoothing_frames);
  const std::size_t lag = static_cast<std::size_t>(cfg.differencing_lag);
  const bool has_history = window_.has_depth(lag + m);
  const double dt_eff = static_cast<double>(lag) * scenario_.dt;
  const double now = world_.time;

  const bool need_speeds = active(DimensionTag::Motion) || active(DimensionTag::GoalSpeed);
  const bool need_codes = active(DimensionTag::Direction) || active(DimensionTag::GoalDirection);

  std::vector<FeatureMap> maps;

  FeatureMap motion;
  if (need_speeds) {
    if (has_history) {
      const auto curr = window_.smoothed_sonar(0, m, cfg.smoothing_kind);
      const auto prev = window_.smoothed_sonar(lag, m, cfg.smoothing_kind);
      motion = motion_map(prev, curr, dt_eff, world_.max_speed, &kin.speeds);
    } else {
      motion = FeatureMap{std::vector<double>(kSectorCount, 0.0), Resolution::Sectors8,
                          DimensionTag::Motion, "motion"};
    }
  }
  if (active(DimensionTag::Motion)) maps.push_back(motion);

  FeatureMap direction;
  if (need_codes) {
    if (has_history) {
      const auto s_curr = window_.smoothed_sonar(0, m, cfg.smoothing_kind);
      const auto s_prev = window_.smoothed_sonar(lag, m, cfg.smoothing_kind);
      const auto r_curr = window_.smoothed_range(0, m, cfg.smoothing_kind);
      const auto r_prev = window_.smoothed_range(lag, m, cfg.smoothing_kind);
      direction = direction_map(s_prev, s_curr, r_prev, r_curr, dt_eff, cfg.direction_deadband,
                                &kin.direction_codes);
    } else {
      direction = FeatureMap{std::vector<double>(kSectorCount, 0.0), Resolution::Sectors8,
                             DimensionTag::Direction, "direction"};
    }
  }
  if (active(DimensionTag::Direction)) maps.push_back(direction);

  const bool need_distances =
      active(DimensionTag::Distance) || active(DimensionTag::GoalDistance);
  if (need_distances) {
    const auto& frame = window_.range_at(0);
    FeatureMap range_distance = distance_map(frame.readings, kRangeSaturation, &kin.raw_distances);
    if (active(DimensionTag::Distance)) {
      const auto uses = [&](const char* name) {
        return std::find(cfg.distance_sources.begin(), cfg.distance_sources.end(), name) !=
               cfg.distance_sources.end();
      };
      if (uses("range")) maps.push_back(range_distance);
      if (uses("sonar"))
        maps.push_back(sonar_distance_map(window_.sonar_at(0).readings, kSonarMaxRange));
    }
  }

  if (active(DimensionTag::GoalSpeed)) {
    if (const auto goal = active_goal(GoalQuantity::Speed, now))
      maps.push_back(goal_speed_map(kin.speeds, *goal, world_.max_speed, cfg.equal_tolerance));
  }
  if (active(DimensionTag::GoalDirection)) {
    if (const auto goal = active_goal(GoalQuantity::Direction, now))
      maps.push_back(goal_direction_map(kin.direction_codes, *goal));
  }
  if (active(DimensionTag::GoalDistance)) {
    if (const auto goal = active_goal(GoalQuantity::Distance, now))
      maps.push_back(
          goal_distance_map(kin.raw_distances, *goal, kRangeSaturation, cfg.equal_tolerance));
  }
  return maps;
}

TickRecord Pipeline::tick() {
  step(world_);

  TickRecord record;
  record.time = world_.time;
  record.sonar = sample_sonar(world_, scenario_.noise, sonar_rng_);
  record.range = sample_range(world_, scenario_.noise, range_rng_);
  window_.push(record.sonar, record.range);

  record.maps = compute_maps(record.kinematics);

  bool zero_weights = false;
  record.combined = combine(record.maps, scenario_.weights, &zero_weights);
  if (zero_weights && !warned_zero_weights_) {
    std::fprintf(stderr, "attentive: warning: all active feature weights are zero\n");
    warned_zero_weights_ = true;
  }

  record.td_contribution = top_down_contribution(record.maps, scenario_.weights);
  update_attention(state_, prev_winner_, record.td_contribution, scenario_.chronometry,
                   scenario_.dt);
  for (int s = 0; s < kSectorCount; ++s) {
    record.modulation[s] = state_.sectors[s].modulation;
    record.phases[s] = state_.sectors[s].phase;
  }

  record.saliency = saliency(record.combined, state_, scenario_.global_gain);
  record.winner = select_winner(record.saliency, scenario_.wta_threshold, record.time,
                                record.maps, scenario_.weights);
  prev_winner_ = record.winner;
  return record;
}

std::vector<std::string> Pipeline::map_names() const {
  const FeatureConfig& cfg = scenario_.features;
  const auto active = [&](DimensionTag tag) {
    return std::find(cfg.active.begin(), cfg.active.end(), tag) != cfg.active.end();
  };
  std::vector<std::string> names;
  if (active(DimensionTag::Motion)) names.emplace_back("motion");
  if (active(DimensionTag::Direction)) names.emplace_back("direction");
  if (active(DimensionTag::Distance)) {
    for (const auto& src : cfg.distance_sources)
      names.emplace_back(src == "range" ? "distance" : "distance_sonar");
  }
  if (active(DimensionTag::GoalSpeed)) names.emplace_back("goal_speed");
  if (active(DimensionTag::GoalDirection)) names.emplace_back("goal_direction");
  if (active(DimensionTag::GoalDistance)) names.emplace_back("goal_distance");
  return names;
}

RunTrace run(const Scenario& scenario) {
  const auto problems = validate(scenario);
  if (!problems.empty()) throw ValidationError(problems);

  Pipeline pipeline(scenario);
  RunTrace trace;
  trace.scenario = scenario;
  trace.map_names = pipeline.map_names();

  const long n_ticks = std::lround(scenario.duration / scenario.dt);
  trace.ticks.reserve(static_cast<std::size_t>(n_ticks));
  for (long i = 0; i < n_ticks; ++i) {
    trace.ticks.push_back(pipeline.tick());
    if (trace.ticks.back().winner) trace.winners.push_back(*trace.ticks.back().winner);
  }
  return trace;
}

}  // namespace attentive
