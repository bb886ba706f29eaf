#include "core/memory.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace attentive {

ObservationWindow::ObservationWindow(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ < 2) throw std::invalid_argument("observation window capacity must be >= 2");
}

void ObservationWindow::push(const SonarFrame& sonar, const RangeFrame& range) {
  if (sonar.timestamp != range.timestamp)
    throw std::invalid_argument("observation window: mismatched frame timestamps");
  if (!sonar_.empty() && sonar.timestamp <= sonar_.back().timestamp)
    throw std::invalid_argument("observation window: out-of-order frame timestamp");
  sonar_.push_back(sonar);
  range_.push_back(range);
  if (sonar_.size() > capacity_) {
    sonar_.pop_front();
    range_.pop_front();
  }
}

const SonarFrame& ObservationWindow::sonar_at(std::size_t offset) const {
  return sonar_.at(sonar_.size() - 1 - offset);
}

const RangeFrame& ObservationWindow::range_at(std::size_t offset) const {
  return range_.at(range_.size() - 1 - offset);
}

std::optional<ObservationWindow::Pair<SonarFrame>> ObservationWindow::latest_sonar_pair() const {
  if (sonar_.size() < 2) return std::nullopt;
  const SonarFrame& prev = sonar_[sonar_.size() - 2];
  const SonarFrame& curr = sonar_.back();
  return Pair<SonarFrame>{&prev, &curr, curr.timestamp - prev.timestamp};
}

std::optional<ObservationWindow::Pair<RangeFrame>> ObservationWindow::latest_range_pair() const {
  if (range_.size() < 2) return std::nullopt;
  const RangeFrame& prev = range_[range_.size() - 2];
  const RangeFrame& curr = range_.back();
  return Pair<RangeFrame>{&prev, &curr, curr.timestamp - prev.timestamp};
}

namespace {

template <std::size_t N, typename Deque>
std::array<double, N> smooth(const Deque& frames, std::size_t offset, std::size_t count,
                             SmoothingKind kind) {
  if (frames.size() < offset + count || count == 0)
    throw std::out_of_range("observation window: insufficient history for smoothing");
  std::array<double, N> out{};
  std::vector<double> scratch(count);
  for (std::size_t e = 0; e < N; ++e) {
    for (std::size_t j = 0; j < count; ++j)
      scratch[j] = frames[frames.size() - 1 - offset - j].readings[e];
    if (kind == SmoothingKind::Mean) {
      double sum = 0.0;
      for (double v : scratch) sum += v;
      out[e] = sum / static_cast<double>(count);
    } else {
      auto mid = scratch.begin() + static_cast<long>(count / 2);
      std::nth_element(scratch.begin(), mid, scratch.end());
      double m = *mid;
      if (count % 2 == 0) {
        const double lower = *std::max_element(scratch.begin(), mid);
        m = 0.5 * (m + lower);
      }
      out[e] = m;
    }
  }
  return out;
}

}  // namespace

std::array<double, kSectorCount> ObservationWindow::smoothed_sonar(std::size_t offset,
                                                                   std::size_t frames,
                                                                   SmoothingKind kind) const {
  return smooth<kSectorCount>(sonar_, offset, frames, kind);
}

std::array<double, kBeamCount> ObservationWindow::smoothed_range(std::size_t offset,
                                                                 std::size_t frames,
                                                                 SmoothingKind kind) const {
  return smooth<kBeamCount>(range_, offset, frames, kind);
}

}  // namespace attentive
