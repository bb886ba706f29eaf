#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/memory.hpp"
#include "core/sensors.hpp"

namespace attentive {

enum class DimensionTag { Motion, Direction, Distance, GoalSpeed, GoalDirection, GoalDistance };
enum class Resolution { Sectors8, Beams180 };

const char* dimension_tag_name(DimensionTag tag);
bool is_top_down(DimensionTag tag);

// Normalized conspicuity vector over the frontal field. Every value is
// in [0,1]; length matches the resolution (8 sectors or 180 beams).
struct FeatureMap {
  std::vector<double> values;
  Resolution resolution = Resolution::Sectors8;
  DimensionTag tag = DimensionTag::Motion;
  std::string name;  // export name, e.g. "motion", "distance_sonar"
};

// Raw physical quantities of the current tick, kept alongside the
// normalized maps for goal evaluation and trace export.
struct RawKinematics {
  std::array<double, kSectorCount> speeds{};          // m/s, unsigned
  std::array<int, kSectorCount> direction_codes{};    // -1 approach, +1 recede, 0 none
  std::array<double, kBeamCount> raw_distances{};     // m
};

enum class GoalQuantity { Speed, Direction, Distance };
enum class GoalRelation { Equal, Between, Greater, Smaller };

struct Goal {
  GoalQuantity quantity = GoalQuantity::Speed;
  GoalRelation relation = GoalRelation::Greater;
  double desired = 0.0;  // m/s, direction code, or m
  double delta = 0.0;    // Between only: satisfied band is [desired, desired+delta]
};

// Per-sector speed contrast: v_n = |ds_n/dt|, c_n = |v_n - mean(v)|,
// output min(c_n / max_speed, 1).
FeatureMap motion_map(const std::array<double, kSectorCount>& prev,
                      const std::array<double, kSectorCount>& curr, double dt, double max_speed,
                      std::array<double, kSectorCount>* raw_speeds_out = nullptr);

// Sign of ds/dt with a dead-band: +1 receding, -1 approaching, 0 otherwise.
int speed_sign_threshold(double ds, double dt, double deadband);

// Direction rarity built from both sensors: ternary codes per sonar sector
// and per range beam, rarity 1/count(code) per path, the beam path pooled
// to sectors by mean, and the two paths averaged.
FeatureMap direction_map(const std::array<double, kSectorCount>& sonar_prev,
                         const std::array<double, kSectorCount>& sonar_curr,
                         const std::array<double, kBeamCount>& range_prev,
                         const std::array<double, kBeamCount>& range_curr, double dt,
                         double deadband,
                         std::array<int, kSectorCount>* codes_out = nullptr);

// Per-beam deviation from the frame mean, normalized by the scanner
// saturation value.
FeatureMap distance_map(const std::array<double, kBeamCount>& beams, double saturation,
                        std::array<double, kBeamCount>* raw_distances_out = nullptr);

// Same deviation-from-mean construction on the sonar ring, normalized by
// the sonar saturation; lets both sensors feed the Distance dimension.
FeatureMap sonar_distance_map(const std::array<double, kSectorCount>& readings,
                              double saturation);

// Goal mapping over raw sector speeds (m/s). Satisfied speeds map to
// exactly 1; the remaining branches are ratio/complement falloffs, clamped
// to [0,1]. Equal uses a relative tolerance band.
FeatureMap goal_speed_map(const std::array<double, kSectorCount>& raw_speeds, const Goal& goal,
                          double max_speed, double equal_tolerance);

// 1 where the sector's ternary code equals the desired code, else 0.
FeatureMap goal_direction_map(const std::array<int, kSectorCount>& codes, const Goal& goal);

// Goal mapping over raw beam distances (m), mirroring goal_speed_map with
// the scanner saturation as the normalizer.
FeatureMap goal_distance_map(const std::array<double, kBeamCount>& raw_distances,
                             const Goal& goal, double max_distance, double equal_tolerance);

// Convenience wrappers over the two newest frames of a window; return an
// all-zero map when fewer than two frames exist (cold start).
FeatureMap motion_map_from_window(const ObservationWindow& window, double max_speed,
                                  std::array<double, kSectorCount>* raw_speeds_out = nullptr);
FeatureMap direction_map_from_window(const ObservationWindow& window, double deadband,
                                     std::array<int, kSectorCount>* codes_out = nullptr);

}  // namespace attentive
