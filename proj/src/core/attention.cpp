#include "core/attention.hpp"

#include <algorithm>
#include <cmath>

namespace attentive {

std::array<double, kSectorCount> project_to_sectors(const FeatureMap& map) {
  std::array<double, kSectorCount> out{};
  if (map.resolution == Resolution::Sectors8) {
    for (int s = 0; s < kSectorCount; ++s) out[s] = map.values[s];
  } else {
    for (int i = 0; i < kBeamCount; ++i) {
      const int s = sector_of_beam(i);
      out[s] = std::max(out[s], map.values[i]);
    }
  }
  return out;
}

namespace {

std::array<double, kSectorCount> weighted_share(const std::vector<FeatureMap>& maps,
                                                const WeightSet& weights, bool top_down_only,
                                                bool bottom_up_only) {
  std::array<double, kSectorCount> sum{};
  double denom = 0.0;
  for (const auto& map : maps) denom += weights.get(map.tag);
  if (denom <= 0.0) return sum;
  for (const auto& map : maps) {
    if (top_down_only && !is_top_down(map.tag)) continue;
    if (bottom_up_only && is_top_down(map.tag)) continue;
    const double w = weights.get(map.tag);
    if (w <= 0.0) continue;
    const auto proj = project_to_sectors(map);
    for (int s = 0; s < kSectorCount; ++s) sum[s] += w * proj[s] / denom;
  }
  return sum;
}

}  // namespace

CombinedMap combine(const std::vector<FeatureMap>& maps, const WeightSet& weights,
                    bool* zero_weight_warning) {
  CombinedMap combined;
  if (maps.empty()) return combined;
  double denom = 0.0;
  for (const auto& map : maps) denom += weights.get(map.tag);
  if (denom <= 0.0) {
    if (zero_weight_warning) *zero_weight_warning = true;
    return combined;
  }
  for (const auto& map : maps) {
    const double w = weights.get(map.tag);
    if (w <= 0.0) continue;
    const auto proj = project_to_sectors(map);
    for (int s = 0; s < kSectorCount; ++s) combined.values[s] += w * proj[s] / denom;
  }
  for (double& v : combined.values) v = std::clamp(v, 0.0, 1.0);
  return combined;
}

std::array<double, kSectorCount> top_down_contribution(const std::vector<FeatureMap>& maps,
                                                       const WeightSet& weights) {
  return weighted_share(maps, weights, true, false);
}

std::array<double, kSectorCount> bottom_up_contribution(const std::vector<FeatureMap>& maps,
                                                        const WeightSet& weights) {
  return weighted_share(maps, weights, false, true);
}

WinnerSource attribute_source(const std::vector<FeatureMap>& maps, const WeightSet& weights,
                              int sector) {
  const auto td = top_down_contribution(maps, weights);
  const auto bu = bottom_up_contribution(maps, weights);
  return td[sector] > bu[sector] ? WinnerSource::TopDown : WinnerSource::BottomUp;
}

namespace {

void start_bottom_up(SectorState& s, const ChronometryParams& p) {
  s.phase = Phase::PendingOnset;
  s.td_episode = false;
  s.phase_time = 0.0;
  s.enhanced_budget = p.bu_enhance;
}

void start_top_down(SectorState& s) {
  s.phase = Phase::PendingOnset;
  s.td_episode = true;
  s.phase_time = 0.0;
}

void apply_winner(SectorState& s, WinnerSource source, const ChronometryParams& p) {
  if (source == WinnerSource::TopDown) {
    switch (s.phase) {
      case Phase::Idle:
      case Phase::TdRelease:
      case Phase::Enhanced:
      case Phase::Inhibited:
        start_top_down(s);
        break;
      case Phase::PendingOnset:
        if (!s.td_episode) start_top_down(s);
        break;
      case Phase::TdActive:
      case Phase::TdAdapted:
        break;  // already attended
    }
  } else {
    switch (s.phase) {
      case Phase::Idle:
      case Phase::TdRelease:
        start_bottom_up(s, p);
        break;
      default:
        break;  // inhibited and top-down episodes ignore bottom-up triggers
    }
  }
}

// Advances one sector by dt with exact boundary carry-over.
void advance(SectorState& s, const ChronometryParams& p, double dt, double td_support) {
  // Goal support lapse ends a top-down episode immediately.
  if ((s.phase == Phase::TdActive || s.phase == Phase::TdAdapted) &&
      td_support < p.td_support_threshold) {
    s.phase = Phase::TdRelease;
    s.phase_time = 0.0;
    s.release_start = s.modulation;
  }

  double remaining = dt;
  while (remaining > 1e-12) {
    switch (s.phase) {
      case Phase::Idle: {
        s.modulation *= std::exp(-remaining / p.decay_tau);
        if (std::abs(s.modulation) < 1e-12) s.modulation = 0.0;
        remaining = 0.0;
        break;
      }
      case Phase::PendingOnset: {
        const double onset = s.td_episode ? p.td_onset : p.bu_onset;
        const double take = std::min(remaining, onset - s.phase_time);
        s.phase_time += take;
        s.modulation *= std::exp(-take / p.decay_tau);
        remaining -= take;
        if (s.phase_time >= onset - 1e-12) {
          if (s.td_episode) {
            s.phase = s.adapted_latch ? Phase::TdAdapted : Phase::TdActive;
            if (!s.adapted_latch) s.td_attendance = 0.0;
            s.modulation = s.adapted_latch ? p.enhance_amplitude * p.adaptation_factor
                                           : p.enhance_amplitude;
          } else {
            s.phase = Phase::Enhanced;
            s.modulation = p.enhance_amplitude;
          }
          s.phase_time = 0.0;
        }
        break;
      }
      case Phase::Enhanced: {
        const double take = std::min(remaining, s.enhanced_budget - s.phase_time);
        s.phase_time += take;
        s.modulation = p.enhance_amplitude;
        remaining -= take;
        if (s.phase_time >= s.enhanced_budget - 1e-12) {
          s.phase = Phase::Inhibited;
          s.phase_time = 0.0;
          s.modulation = -p.ior_depth;
        }
        break;
      }
      case Phase::Inhibited: {
        const double take = std::min(remaining, p.ior_duration - s.phase_time);
        s.phase_time += take;
        s.modulation = -p.ior_depth * (1.0 - s.phase_time / p.ior_duration);
        remaining -= take;
        if (s.phase_time >= p.ior_duration - 1e-12) {
          s.phase = Phase::Idle;
          s.phase_time = 0.0;
          s.modulation = 0.0;
        }
        break;
      }
      case Phase::TdActive: {
        s.modulation = p.enhance_amplitude;
        s.td_attendance += remaining;
        remaining = 0.0;
        if (s.td_attendance >= p.vigilance_limit - 1e-12) {
          s.phase = Phase::TdAdapted;
          s.adapted_latch = true;
        }
        break;
      }
      case Phase::TdAdapted: {
        s.modulation = p.enhance_amplitude * p.adaptation_factor;
        s.td_attendance += remaining;
        s.adapted_latch = true;
        remaining = 0.0;
        break;
      }
      case Phase::TdRelease: {
        const double take = std::min(remaining, p.td_release - s.phase_time);
        s.phase_time += take;
        s.modulation = s.release_start * (1.0 - s.phase_time / p.td_release);
        remaining -= take;
        if (s.phase_time >= p.td_release - 1e-12) {
          s.phase = Phase::Idle;
          s.phase_time = 0.0;
          s.modulation = 0.0;
        }
        break;
      }
    }
  }

  if (s.phase == Phase::TdActive || s.phase == Phase::TdAdapted) {
    s.unattended = 0.0;
  } else {
    s.unattended += dt;
    if (s.adapted_latch && s.unattended >= p.adaptation_recovery) {
      s.adapted_latch = false;
      s.td_attendance = 0.0;
    }
  }
  s.modulation = std::clamp(s.modulation, -1.0, 1.0);
}

}  // namespace

void update_attention(AttentionalState& state, const std::optional<WinnerEvent>& winner,
                      const std::array<double, kSectorCount>& td_contribution,
                      const ChronometryParams& params, double dt) {
  if (winner) {
    SectorState& s = state.sectors[winner->sector];
    // Repeated supra-threshold wins extend an ongoing enhancement by one
    // dt per win, up to twice the base duration.
    if (winner->source == WinnerSource::BottomUp &&
        (s.phase == Phase::Enhanced || (s.phase == Phase::PendingOnset && !s.td_episode))) {
      s.enhanced_budget = std::min(s.enhanced_budget + dt, 2.0 * params.bu_enhance);
    } else {
      apply_winner(s, winner->source, params);
    }
  }

  for (int i = 0; i < kSectorCount; ++i)
    advance(state.sectors[i], params, dt, td_contribution[i]);

  // Lateral excitation: while a sector is enhanced, idle neighbors are
  // raised toward A*exp(-k^2 / (2*sigma^2)) with k the sector distance.
  // Inhibited and goal-attended sectors are left untouched.
  for (int s = 0; s < kSectorCount; ++s) {
    if (state.sectors[s].phase != Phase::Enhanced) continue;
    for (int q = 0; q < kSectorCount; ++q) {
      if (q == s || state.sectors[q].phase != Phase::Idle) continue;
      const double k = static_cast<double>(std::abs(q - s));
      const double spread = params.enhance_amplitude *
                            std::exp(-(k * k) / (2.0 * params.lateral_sigma * params.lateral_sigma));
      state.sectors[q].modulation =
          std::clamp(std::max(state.sectors[q].modulation, spread), -1.0, 1.0);
    }
  }
}

SaliencyMap saliency(const CombinedMap& combined, const AttentionalState& state, double gain) {
  SaliencyMap map;
  for (int s = 0; s < kSectorCount; ++s)
    map.values[s] = std::max(0.0, combined.values[s] * (1.0 + state.sectors[s].modulation)) * gain;
  return map;
}

std::optional<WinnerEvent> select_winner(const SaliencyMap& map, double threshold, double time,
                                         const std::vector<FeatureMap>& maps,
                                         const WeightSet& weights) {
  int best = 0;
  for (int s = 1; s < kSectorCount; ++s)
    if (map.values[s] > map.values[best]) best = s;
  if (map.values[best] < threshold) return std::nullopt;
  WinnerEvent event;
  event.time = time;
  event.sector = best;
  event.saliency = map.values[best];
  event.source = attribute_source(maps, weights, best);
  return event;
}

}  // namespace attentive
