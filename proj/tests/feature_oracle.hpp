// Independent straight-line transcriptions of the feature mapping rules,
// kept deliberately separate from the library implementation so the two
// can be checked against each other.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace oracle {

inline constexpr int kSectors = 8;
inline constexpr int kBeams = 180;

inline double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

inline std::array<double, kSectors> motion(const std::array<double, kSectors>& prev,
                                           const std::array<double, kSectors>& curr, double dt,
                                           double max_speed) {
  std::array<double, kSectors> v{};
  double sum = 0.0;
  for (int n = 0; n < kSectors; ++n) {
    v[n] = std::fabs((curr[n] - prev[n]) / dt);
    sum += v[n];
  }
  const double mean = sum / kSectors;
  std::array<double, kSectors> out{};
  for (int n = 0; n < kSectors; ++n) out[n] = std::min(std::fabs(v[n] - mean) / max_speed, 1.0);
  return out;
}

inline int sign_code(double ds, double dt, double deadband) {
  if (ds / dt > deadband) return 1;
  if (ds / dt < -deadband) return -1;
  return 0;
}

inline std::array<double, kSectors> direction(const std::array<double, kSectors>& sonar_prev,
                                              const std::array<double, kSectors>& sonar_curr,
                                              const std::array<double, kBeams>& range_prev,
                                              const std::array<double, kBeams>& range_curr,
                                              double dt, double deadband) {
  std::array<int, kSectors> sonar_codes{};
  for (int n = 0; n < kSectors; ++n)
    sonar_codes[n] = sign_code(sonar_curr[n] - sonar_prev[n], dt, deadband);
  std::array<double, kSectors> sonar_rarity{};
  for (int n = 0; n < kSectors; ++n) {
    int count = 0;
    for (int m = 0; m < kSectors; ++m)
      if (sonar_codes[m] == sonar_codes[n]) ++count;
    sonar_rarity[n] = 1.0 / count;
  }

  std::array<int, kBeams> beam_codes{};
  for (int i = 0; i < kBeams; ++i)
    beam_codes[i] = sign_code(range_curr[i] - range_prev[i], dt, deadband);
  std::array<double, kBeams> beam_rarity{};
  for (int i = 0; i < kBeams; ++i) {
    int count = 0;
    for (int j = 0; j < kBeams; ++j)
      if (beam_codes[j] == beam_codes[i]) ++count;
    beam_rarity[i] = 1.0 / count;
  }

  std::array<double, kSectors> pooled{};
  std::array<int, kSectors> beams_in{};
  for (int i = 0; i < kBeams; ++i) {
    const int s = static_cast<int>(std::floor(i / 22.5));
    pooled[s] += beam_rarity[i];
    beams_in[s] += 1;
  }
  std::array<double, kSectors> out{};
  for (int n = 0; n < kSectors; ++n) out[n] = 0.5 * (sonar_rarity[n] + pooled[n] / beams_in[n]);
  return out;
}

inline std::array<double, kBeams> distance(const std::array<double, kBeams>& beams, double mr) {
  double sum = 0.0;
  for (double b : beams) sum += b;
  const double mean = sum / kBeams;
  std::array<double, kBeams> out{};
  for (int n = 0; n < kBeams; ++n) out[n] = std::fabs(beams[n] - mean) / mr;
  return out;
}

enum class Relation { Equal, Between, Greater, Smaller };

inline double goal_piecewise(double raw, Relation relation, double desired, double delta,
                             double normalizer, double tol) {
  switch (relation) {
    case Relation::Equal:
      if (std::fabs(raw - desired) <= tol * std::fabs(desired)) return 1.0;
      return clamp01(raw / normalizer);
    case Relation::Between:
      if (raw >= desired && raw <= desired + delta) return 1.0;
      if (raw < desired) return clamp01(raw / desired);
      return clamp01(1.0 - (raw - (desired + delta)) / (normalizer - (desired + delta)));
    case Relation::Greater:
      if (raw > desired) return 1.0;
      return clamp01(raw / desired);
    case Relation::Smaller:
      if (raw < desired) return 1.0;
      return clamp01(1.0 - (raw - desired) / (normalizer - desired));
  }
  return 0.0;
}

template <std::size_t N>
inline std::array<double, N> goal_map(const std::array<double, N>& raw, Relation relation,
                                      double desired, double delta, double normalizer,
                                      double tol) {
  std::array<double, N> out{};
  for (std::size_t n = 0; n < N; ++n)
    out[n] = goal_piecewise(raw[n], relation, desired, delta, normalizer, tol);
  return out;
}

inline std::array<double, kSectors> goal_direction(const std::array<int, kSectors>& codes,
                                                   int desired) {
  std::array<double, kSectors> out{};
  for (int n = 0; n < kSectors; ++n) out[n] = codes[n] == desired ? 1.0 : 0.0;
  return out;
}

}  // namespace oracle
