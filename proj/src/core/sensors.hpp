#pragma once

#include <array>
#include <cmath>

#include "core/rng.hpp"
#include "core/world.hpp"

namespace attentive {

inline constexpr int kSectorCount = 8;
inline constexpr int kBeamCount = 180;
inline constexpr int kRaysPerSector = 5;
inline constexpr double kSonarMinRange = 0.15;
inline constexpr double kSonarMaxRange = 5.0;
inline constexpr double kRangeSaturation = 20.0;
inline constexpr double kSectorWidthDeg = 180.0 / kSectorCount;

struct SonarFrame {
  std::array<double, kSectorCount> readings{};
  double timestamp = 0.0;
};

struct RangeFrame {
  std::array<double, kBeamCount> readings{};
  double timestamp = 0.0;
};

struct NoiseModel {
  double relative_sigma = 0.05;
  bool enabled = true;
};

// Beam i (1 degree wide, frontal 180) belongs to sector floor(i / 22.5).
inline int sector_of_beam(int beam) { return beam * kSectorCount / kBeamCount; }

inline int sector_of_bearing_deg(double bearing_deg) {
  int s = static_cast<int>(std::floor(bearing_deg / kSectorWidthDeg));
  if (s < 0) s = 0;
  if (s >= kSectorCount) s = kSectorCount - 1;
  return s;
}

// Bearing 0 is the right edge of the frontal half-plane, 90 deg straight
// ahead, 180 the left edge.
inline double bearing_to_world_angle(const Pose& pose, double bearing_rad) {
  return pose.heading - M_PI / 2.0 + bearing_rad;
}

// value*(1 + eps), eps ~ N(0, relative_sigma); identity when disabled.
double apply_noise(double value, const NoiseModel& noise, Rng& rng);

// Sonar k reads the minimum hit over 5 evenly spaced rays in its 22.5 deg
// cone; no echo within 5 m reads exactly 5.0; in-range echoes are
// noise-perturbed then clamped to [0.15, 5.0].
SonarFrame sample_sonar(const World& world, const NoiseModel& noise, Rng& rng);

// One ray per beam at bearing (i + 0.5) deg; misses saturate at exactly
// 20.0; hits are noise-perturbed then clamped to (0, 20.0].
RangeFrame sample_range(const World& world, const NoiseModel& noise, Rng& rng);

}  // namespace attentive
