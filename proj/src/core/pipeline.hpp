#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/attention.hpp"
#include "core/memory.hpp"
#include "core/rng.hpp"
#include "core/scenario.hpp"

namespace attentive {

struct TickRecord {
  double time = 0.0;
  SonarFrame sonar;
  RangeFrame range;
  std::vector<FeatureMap> maps;
  RawKinematics kinematics;
  CombinedMap combined;
  std::array<double, kSectorCount> modulation{};
  std::array<Phase, kSectorCount> phases{};
  std::array<double, kSectorCount> td_contribution{};
  SaliencyMap saliency;
  std::optional<WinnerEvent> winner;
};

struct RunTrace {
  Scenario scenario;
  std::vector<std::string> map_names;  // stable export order
  std::vector<TickRecord> ticks;
  std::vector<WinnerEvent> winners;
};

// One closed-loop execution context: world, sensor streams, sensorial
// memory and attentional state. tick() runs one full cycle:
// step -> sample -> remember -> features -> combine -> attention ->
// saliency -> winner.
class Pipeline {
 public:
  explicit Pipeline(const Scenario& scenario);

  TickRecord tick();

  const World& world() const { return world_; }
  const AttentionalState& attention() const { return state_; }

  // Export names of every map the configuration can produce.
  std::vector<std::string> map_names() const;

 private:
  std::vector<FeatureMap> compute_maps(RawKinematics& kin);
  std::optional<Goal> active_goal(GoalQuantity quantity, double time) const;

  Scenario scenario_;
  World world_;
  Rng sonar_rng_;
  Rng range_rng_;
  ObservationWindow window_;
  AttentionalState state_;
  std::optional<WinnerEvent> prev_winner_;
  bool warned_zero_weights_ = false;
};

// Executes duration/dt ticks; fully deterministic given the seed.
RunTrace run(const Scenario& scenario);

}  // namespace attentive
