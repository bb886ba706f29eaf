#include "core/sensors.hpp"

#include <algorithm>
#include <limits>

namespace attentive {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

double apply_noise(double value, const NoiseModel& noise, Rng& rng) {
  if (!noise.enabled) return value;
  return value * (1.0 + noise.relative_sigma * rng.gaussian());
}

SonarFrame sample_sonar(const World& world, const NoiseModel& noise, Rng& rng) {
  SonarFrame frame;
  frame.timestamp = world.time;
  const Vec2 origin = world.attentive_pose.position();
  const double ray_step = kSectorWidthDeg / kRaysPerSector;

  for (int k = 0; k < kSectorCount; ++k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < kRaysPerSector; ++j) {
      const double bearing_deg = k * kSectorWidthDeg + (j + 0.5) * ray_step;
      const double angle = bearing_to_world_angle(world.attentive_pose, bearing_deg * kDegToRad);
      if (auto hit = cast_ray(world, origin, angle)) nearest = std::min(nearest, *hit);
    }
    if (nearest > kSonarMaxRange) {
      frame.readings[k] = kSonarMaxRange;  // no echo: deterministic saturation
    } else {
      frame.readings[k] =
          std::clamp(apply_noise(nearest, noise, rng), kSonarMinRange, kSonarMaxRange);
    }
  }
  return frame;
}

RangeFrame sample_range(const World& world, const NoiseModel& noise, Rng& rng) {
  RangeFrame frame;
  frame.timestamp = world.time;
  const Vec2 origin = world.attentive_pose.position();

  for (int i = 0; i < kBeamCount; ++i) {
    const double bearing_deg = i + 0.5;
    const double angle = bearing_to_world_angle(world.attentive_pose, bearing_deg * kDegToRad);
    const auto hit = cast_ray(world, origin, angle);
    if (!hit || *hit > kRangeSaturation) {
      frame.readings[i] = kRangeSaturation;
    } else {
      frame.readings[i] =
          std::clamp(apply_noise(*hit, noise, rng), 1e-3, kRangeSaturation);
    }
  }
  return frame;
}

}  // namespace attentive
