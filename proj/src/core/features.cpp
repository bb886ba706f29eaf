#include "core/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace attentive {

const char* dimension_tag_name(DimensionTag tag) {
  switch (tag) {
    case DimensionTag::Motion: return "motion";
    case DimensionTag::Direction: return "direction";
    case DimensionTag::Distance: return "distance";
    case DimensionTag::GoalSpeed: return "goal_speed";
    case DimensionTag::GoalDirection: return "goal_direction";
    case DimensionTag::GoalDistance: return "goal_distance";
  }
  return "unknown";
}

bool is_top_down(DimensionTag tag) {
  return tag == DimensionTag::GoalSpeed || tag == DimensionTag::GoalDirection ||
         tag == DimensionTag::GoalDistance;
}

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

template <std::size_t N>
double mean(const std::array<double, N>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(N);
}

FeatureMap make_map(std::size_t n, Resolution res, DimensionTag tag) {
  FeatureMap map;
  map.values.assign(n, 0.0);
  map.resolution = res;
  map.tag = tag;
  map.name = dimension_tag_name(tag);
  return map;
}

template <std::size_t N>
void ternary_codes(const std::array<double, N>& prev, const std::array<double, N>& curr,
                   double dt, double deadband, std::array<int, N>& codes) {
  for (std::size_t i = 0; i < N; ++i)
    codes[i] = speed_sign_threshold(curr[i] - prev[i], dt, deadband);
}

// Rarity of each element's code: 1/count(code). A unique code scores 1.
template <std::size_t N>
void code_rarity(const std::array<int, N>& codes, std::array<double, N>& rarity) {
  int count[3] = {0, 0, 0};
  for (int c : codes) count[c + 1] += 1;
  for (std::size_t i = 0; i < N; ++i)
    rarity[i] = 1.0 / static_cast<double>(count[codes[i] + 1]);
}

}  // namespace

FeatureMap motion_map(const std::array<double, kSectorCount>& prev,
                      const std::array<double, kSectorCount>& curr, double dt, double max_speed,
                      std::array<double, kSectorCount>* raw_speeds_out) {
  if (dt <= 0.0) throw std::invalid_argument("motion_map: dt must be positive");
  std::array<double, kSectorCount> speeds{};
  for (int n = 0; n < kSectorCount; ++n) speeds[n] = std::abs((curr[n] - prev[n]) / dt);
  const double m = mean(speeds);

  FeatureMap map = make_map(kSectorCount, Resolution::Sectors8, DimensionTag::Motion);
  for (int n = 0; n < kSectorCount; ++n)
    map.values[n] = std::min(std::abs(speeds[n] - m) / max_speed, 1.0);
  if (raw_speeds_out) *raw_speeds_out = speeds;
  return map;
}

int speed_sign_threshold(double ds, double dt, double deadband) {
  const double rate = ds / dt;
  if (rate > deadband) return 1;
  if (rate < -deadband) return -1;
  return 0;
}

FeatureMap direction_map(const std::array<double, kSectorCount>& sonar_prev,
                         const std::array<double, kSectorCount>& sonar_curr,
                         const std::array<double, kBeamCount>& range_prev,
                         const std::array<double, kBeamCount>& range_curr, double dt,
                         double deadband, std::array<int, kSectorCount>* codes_out) {
  if (dt <= 0.0) throw std::invalid_argument("direction_map: dt must be positive");

  std::array<int, kSectorCount> sonar_codes{};
  ternary_codes(sonar_prev, sonar_curr, dt, deadband, sonar_codes);
  std::array<double, kSectorCount> sonar_rarity{};
  code_rarity(sonar_codes, sonar_rarity);

  std::array<int, kBeamCount> beam_codes{};
  ternary_codes(range_prev, range_curr, dt, deadband, beam_codes);
  std::array<double, kBeamCount> beam_rarity{};
  code_rarity(beam_codes, beam_rarity);

  // Pool beam rarities into sectors by mean, then average the two paths.
  std::array<double, kSectorCount> pooled{};
  std::array<int, kSectorCount> beam_counts{};
  for (int i = 0; i < kBeamCount; ++i) {
    pooled[sector_of_beam(i)] += beam_rarity[i];
    beam_counts[sector_of_beam(i)] += 1;
  }
  FeatureMap map = make_map(kSectorCount, Resolution::Sectors8, DimensionTag::Direction);
  for (int n = 0; n < kSectorCount; ++n) {
    pooled[n] /= static_cast<double>(beam_counts[n]);
    map.values[n] = 0.5 * (sonar_rarity[n] + pooled[n]);
  }
  if (codes_out) *codes_out = sonar_codes;
  return map;
}

FeatureMap distance_map(const std::array<double, kBeamCount>& beams, double saturation,
                        std::array<double, kBeamCount>* raw_distances_out) {
  const double m = mean(beams);
  FeatureMap map = make_map(kBeamCount, Resolution::Beams180, DimensionTag::Distance);
  for (int n = 0; n < kBeamCount; ++n) map.values[n] = std::abs(beams[n] - m) / saturation;
  if (raw_distances_out) *raw_distances_out = beams;
  return map;
}

FeatureMap sonar_distance_map(const std::array<double, kSectorCount>& readings,
                              double saturation) {
  const double m = mean(readings);
  FeatureMap map = make_map(kSectorCount, Resolution::Sectors8, DimensionTag::Distance);
  map.name = "distance_sonar";
  for (int n = 0; n < kSectorCount; ++n) map.values[n] = std::abs(readings[n] - m) / saturation;
  return map;
}

namespace {

// Shared piecewise goal mapping for the two continuous quantities.
double goal_value(double raw, const Goal& goal, double normalizer, double equal_tolerance) {
  const double desired = goal.desired;
  switch (goal.relation) {
    case GoalRelation::Equal: {
      const double band = equal_tolerance * std::abs(desired);
      if (std::abs(raw - desired) <= band) return 1.0;
      return clamp01(raw / normalizer);
    }
    case GoalRelation::Between: {
      const double hi = desired + goal.delta;
      if (raw >= desired && raw <= hi) return 1.0;
      if (raw < desired) return clamp01(raw / desired);
      return clamp01(1.0 - (raw - hi) / (normalizer - hi));
    }
    case GoalRelation::Greater: {
      if (raw > desired) return 1.0;
      return clamp01(raw / desired);
    }
    case GoalRelation::Smaller: {
      if (raw < desired) return 1.0;
      return clamp01(1.0 - (raw - desired) / (normalizer - desired));
    }
  }
  return 0.0;
}

}  // namespace

FeatureMap goal_speed_map(const std::array<double, kSectorCount>& raw_speeds, const Goal& goal,
                          double max_speed, double equal_tolerance) {
  if (goal.quantity != GoalQuantity::Speed)
    throw std::logic_error("goal_speed_map: goal quantity mismatch");
  FeatureMap map = make_map(kSectorCount, Resolution::Sectors8, DimensionTag::GoalSpeed);
  for (int n = 0; n < kSectorCount; ++n)
    map.values[n] = goal_value(raw_speeds[n], goal, max_speed, equal_tolerance);
  return map;
}

FeatureMap goal_direction_map(const std::array<int, kSectorCount>& codes, const Goal& goal) {
  if (goal.quantity != GoalQuantity::Direction)
    throw std::logic_error("goal_direction_map: goal quantity mismatch");
  if (goal.relation != GoalRelation::Equal)
    throw std::logic_error("goal_direction_map: only EQUAL is defined for direction");
  const int desired = static_cast<int>(goal.desired);
  FeatureMap map = make_map(kSectorCount, Resolution::Sectors8, DimensionTag::GoalDirection);
  for (int n = 0; n < kSectorCount; ++n) map.values[n] = codes[n] == desired ? 1.0 : 0.0;
  return map;
}

FeatureMap goal_distance_map(const std::array<double, kBeamCount>& raw_distances,
                             const Goal& goal, double max_distance, double equal_tolerance) {
  if (goal.quantity != GoalQuantity::Distance)
    throw std::logic_error("goal_distance_map: goal quantity mismatch");
  FeatureMap map = make_map(kBeamCount, Resolution::Beams180, DimensionTag::GoalDistance);
  for (int n = 0; n < kBeamCount; ++n)
    map.values[n] = goal_value(raw_distances[n], goal, max_distance, equal_tolerance);
  return map;
}

FeatureMap motion_map_from_window(const ObservationWindow& window, double max_speed,
                                  std::array<double, kSectorCount>* raw_speeds_out) {
  const auto pair = window.latest_sonar_pair();
  if (!pair) {
    if (raw_speeds_out) raw_speeds_out->fill(0.0);
    return FeatureMap{std::vector<double>(kSectorCount, 0.0), Resolution::Sectors8,
                      DimensionTag::Motion, "motion"};
  }
  return motion_map(pair->prev->readings, pair->curr->readings, pair->dt, max_speed,
                    raw_speeds_out);
}

FeatureMap direction_map_from_window(const ObservationWindow& window, double deadband,
                                     std::array<int, kSectorCount>* codes_out) {
  const auto sp = window.latest_sonar_pair();
  const auto rp = window.latest_range_pair();
  if (!sp || !rp) {
    if (codes_out) codes_out->fill(0);
    return FeatureMap{std::vector<double>(kSectorCount, 0.0), Resolution::Sectors8,
                      DimensionTag::Direction, "direction"};
  }
  return direction_map(sp->prev->readings, sp->curr->readings, rp->prev->readings,
                       rp->curr->readings, sp->dt, deadband, codes_out);
}

}  // namespace attentive
