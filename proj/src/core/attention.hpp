#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/features.hpp"

namespace attentive {

struct WeightSet {
  double motion = 1.0;
  double direction = 1.0;
  double distance = 1.0;
  double goal_speed = 1.0;
  double goal_direction = 1.0;
  double goal_distance = 1.0;

  double get(DimensionTag tag) const {
    switch (tag) {
      case DimensionTag::Motion: return motion;
      case DimensionTag::Direction: return direction;
      case DimensionTag::Distance: return distance;
      case DimensionTag::GoalSpeed: return goal_speed;
      case DimensionTag::GoalDirection: return goal_direction;
      case DimensionTag::GoalDistance: return goal_distance;
    }
    return 0.0;
  }
};

struct CombinedMap {
  std::array<double, kSectorCount> values{};
};

struct SaliencyMap {
  std::array<double, kSectorCount> values{};
};

enum class WinnerSource { BottomUp, TopDown };

struct WinnerEvent {
  double time = 0.0;
  int sector = 0;
  double saliency = 0.0;
  WinnerSource source = WinnerSource::BottomUp;
};

// Timing and amplitude constants of the attentional dynamics. Durations
// in seconds; all scenario-overridable.
struct ChronometryParams {
  double bu_onset = 0.150;         // stimulus -> enhancement delay
  double bu_enhance = 0.150;       // base enhancement duration
  double ior_duration = 0.300;     // inhibition-of-return span
  double td_onset = 0.200;         // goal-driven enhancement delay
  double td_release = 0.100;       // decay after the goal evidence lapses
  double vigilance_limit = 6.0;    // continuous attendance before adaptation
  double enhance_amplitude = 1.0;  // +A
  double ior_depth = 0.6;          // -B at inhibition start
  double lateral_sigma = 1.0;      // sectors, spread of lateral excitation
  double decay_tau = 0.3;          // idle exponential decay constant
  double adaptation_factor = 0.5;  // modulation multiplier when adapted
  double adaptation_recovery = 1.0;  // un-attended time that clears adaptation
  double td_support_threshold = 0.2;  // goal contribution that sustains TdActive
};

enum class Phase { Idle, PendingOnset, Enhanced, Inhibited, TdActive, TdAdapted, TdRelease };

struct SectorState {
  double modulation = 0.0;  // in [-1, 1]
  Phase phase = Phase::Idle;
  double phase_time = 0.0;
  bool td_episode = false;       // PendingOnset kind
  double enhanced_budget = 0.0;  // extended by repeated wins, capped
  double td_attendance = 0.0;    // continuous TdActive/TdAdapted seconds
  double release_start = 0.0;    // modulation when TdRelease began
  double unattended = 0.0;
  bool adapted_latch = false;
};

struct AttentionalState {
  std::array<SectorState, kSectorCount> sectors{};
};

// Beams180 maps reduce to sectors by per-sector max (preserves narrow
// pop-out stimuli); Sectors8 maps pass through.
std::array<double, kSectorCount> project_to_sectors(const FeatureMap& map);

// Weight-normalized mean of the projected maps; the denominator counts
// one weight per map present, so two maps sharing a tag average.
CombinedMap combine(const std::vector<FeatureMap>& maps, const WeightSet& weights,
                    bool* zero_weight_warning = nullptr);

// Per-sector goal-driven share of the combined map (same normalization
// as combine); drives TdActive support and source attribution.
std::array<double, kSectorCount> top_down_contribution(const std::vector<FeatureMap>& maps,
                                                       const WeightSet& weights);
std::array<double, kSectorCount> bottom_up_contribution(const std::vector<FeatureMap>& maps,
                                                        const WeightSet& weights);

// TopDown iff the weighted goal contribution at the sector exceeds the
// weighted stimulus contribution; ties go bottom-up.
WinnerSource attribute_source(const std::vector<FeatureMap>& maps, const WeightSet& weights,
                              int sector);

// Advances every sector's episode by dt. `winner` is the previous tick's
// selection; `td_contribution` is the current tick's goal support.
void update_attention(AttentionalState& state, const std::optional<WinnerEvent>& winner,
                      const std::array<double, kSectorCount>& td_contribution,
                      const ChronometryParams& params, double dt);

// L_s = max(0, C_s * (1 + modulation_s)) * gain.
SaliencyMap saliency(const CombinedMap& combined, const AttentionalState& state,
                     double gain = 1.0);

// Argmax sector when its saliency reaches the threshold; ties break to the
// lowest index; nullopt otherwise.
std::optional<WinnerEvent> select_winner(const SaliencyMap& map, double threshold, double time,
                                         const std::vector<FeatureMap>& maps,
                                         const WeightSet& weights);

}  // namespace attentive
