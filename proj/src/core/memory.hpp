#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <optional>

#include "core/sensors.hpp"

namespace attentive {

enum class SmoothingKind { Mean, Median };

// Time-windowed observation store: paired sonar/range ring buffers on one
// tick clock. Frames must arrive with strictly increasing, matching
// timestamps; violations indicate a harness bug and throw.
class ObservationWindow {
 public:
  explicit ObservationWindow(std::size_t capacity = 20);

  void push(const SonarFrame& sonar, const RangeFrame& range);

  std::size_t size() const { return sonar_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool has_depth(std::size_t frames) const { return sonar_.size() >= frames; }

  // offset 0 is the newest frame.
  const SonarFrame& sonar_at(std::size_t offset) const;
  const RangeFrame& range_at(std::size_t offset) const;

  template <typename Frame>
  struct Pair {
    const Frame* prev;
    const Frame* curr;
    double dt;
  };

  // The two newest frames and their time difference; nullopt with fewer
  // than two frames stored (callers emit a zero map in that case).
  std::optional<Pair<SonarFrame>> latest_sonar_pair() const;
  std::optional<Pair<RangeFrame>> latest_range_pair() const;

  // Per-element smoothing over `frames` consecutive frames whose newest
  // member is `offset` frames back. Requires has_depth(offset + frames).
  std::array<double, kSectorCount> smoothed_sonar(std::size_t offset, std::size_t frames,
                                                  SmoothingKind kind) const;
  std::array<double, kBeamCount> smoothed_range(std::size_t offset, std::size_t frames,
                                                SmoothingKind kind) const;

 private:
  std::size_t capacity_;
  std::deque<SonarFrame> sonar_;
  std::deque<RangeFrame> range_;
};

}  // namespace attentive
