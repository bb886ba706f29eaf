#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "core/attention.hpp"

#include "core/rng.hpp"
#include "doctest.h"

using namespace attentive;

namespace {

FeatureMap sector_map(DimensionTag tag, std::array<double, 8> values) {
  FeatureMap map;
  map.values.assign(values.begin(), values.end());
  map.resolution = Resolution::Sectors8;
  map.tag = tag;
  map.name = dimension_tag_name(tag);
  return map;
}

FeatureMap beam_map(DimensionTag tag, int spike_beam, double value) {
  FeatureMap map;
  map.values.assign(kBeamCount, 0.0);
  if (spike_beam >= 0) map.values[spike_beam] = value;
  map.resolution = Resolution::Beams180;
  map.tag = tag;
  map.name = dimension_tag_name(tag);
  return map;
}

WinnerEvent bu_winner(int sector, double time = 0.0) {
  return WinnerEvent{time, sector, 1.0, WinnerSource::BottomUp};
}

WinnerEvent td_winner(int sector, double time = 0.0) {
  return WinnerEvent{time, sector, 1.0, WinnerSource::TopDown};
}

constexpr std::array<double, 8> kNoSupport{};

std::array<double, 8> support_at(int sector, double value) {
  std::array<double, 8> s{};
  s[sector] = value;
  return s;
}

}  // namespace

TEST_CASE("projection: constant beam map becomes constant sector map") {
  FeatureMap map;
  map.values.assign(kBeamCount, 0.37);
  map.resolution = Resolution::Beams180;
  map.tag = DimensionTag::Distance;
  const auto proj = project_to_sectors(map);
  for (double v : proj) CHECK(v == doctest::Approx(0.37));
}

TEST_CASE("projection: beam spikes land in the registered sector") {
  const auto at90 = project_to_sectors(beam_map(DimensionTag::Distance, 90, 0.9));
  CHECK(at90[4] == doctest::Approx(0.9));
  for (int s = 0; s < 8; ++s)
    if (s != 4) CHECK(at90[s] == 0.0);
  const auto at44 = project_to_sectors(beam_map(DimensionTag::Distance, 44, 0.8));
  CHECK(at44[1] == doctest::Approx(0.8));
}

TEST_CASE("combine: single map with weight 1 passes through") {
  const auto map = sector_map(DimensionTag::Motion, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8});
  const CombinedMap c = combine({map}, WeightSet{});
  for (int s = 0; s < 8; ++s) CHECK(c.values[s] == doctest::Approx(map.values[s]));
}

TEST_CASE("combine: weighted mean and scale invariance") {
  const auto a = sector_map(DimensionTag::Motion, {0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4});
  const auto b = sector_map(DimensionTag::Distance, {0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8});
  WeightSet w;
  w.motion = 0.5;
  w.distance = 0.5;
  const CombinedMap c = combine({a, b}, w);
  CHECK(c.values[0] == doctest::Approx(0.6));
  WeightSet doubled = w;
  doubled.motion *= 2.0;
  doubled.distance *= 2.0;
  const CombinedMap c2 = combine({a, b}, doubled);
  for (int s = 0; s < 8; ++s) CHECK(c2.values[s] == doctest::Approx(c.values[s]));
}

TEST_CASE("combine: all-zero weights yield a zero map and a warning flag") {
  const auto a = sector_map(DimensionTag::Motion, {0.4, 0, 0, 0, 0, 0, 0, 0});
  WeightSet w;
  w.motion = 0.0;
  bool warned = false;
  const CombinedMap c = combine({a}, w, &warned);
  CHECK(warned);
  for (double v : c.values) CHECK(v == 0.0);
  CHECK(combine({}, WeightSet{}).values[0] == 0.0);
}

TEST_CASE("source attribution compares weighted contributions") {
  const auto bu = sector_map(DimensionTag::Motion, {0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3});
  CHECK(attribute_source({bu}, WeightSet{}, 0) == WinnerSource::BottomUp);

  const auto td = sector_map(DimensionTag::GoalSpeed, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(attribute_source({bu, td}, WeightSet{}, 0) == WinnerSource::TopDown);

  const auto tie = sector_map(DimensionTag::GoalSpeed, {0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 0.3});
  CHECK(attribute_source({bu, tie}, WeightSet{}, 0) == WinnerSource::BottomUp);
}

TEST_CASE("saliency formula") {
  CombinedMap c;
  c.values.fill(0.5);
  AttentionalState state;
  SaliencyMap l = saliency(c, state);
  for (double v : l.values) CHECK(v == doctest::Approx(0.5));

  state.sectors[2].modulation = -1.0;
  state.sectors[3].modulation = 0.5;
  l = saliency(c, state);
  CHECK(l.values[2] == 0.0);
  CHECK(l.values[3] == doctest::Approx(0.75));
}

TEST_CASE("global gain scales saliency uniformly") {
  CombinedMap c;
  c.values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
  AttentionalState state;
  state.sectors[3].modulation = -0.5;
  const SaliencyMap base = saliency(c, state, 1.0);
  const SaliencyMap doubled = saliency(c, state, 2.0);
  for (int s = 0; s < 8; ++s) CHECK(doubled.values[s] == doctest::Approx(2.0 * base.values[s]));
}

TEST_CASE("winner selection: threshold, argmax, tie-break") {
  SaliencyMap l;
  l.values = {0.1, 0.15, 0.19, 0.1, 0.1, 0.1, 0.1, 0.1};
  CHECK(!select_winner(l, 0.2, 1.0, {}, WeightSet{}).has_value());

  l.values = {0.1, 0.1, 0.1, 0.1, 0.9, 0.1, 0.1, 0.1};
  const auto w = select_winner(l, 0.2, 1.0, {}, WeightSet{});
  REQUIRE(w.has_value());
  CHECK(w->sector == 4);
  CHECK(w->saliency == doctest::Approx(0.9));

  l.values = {0.1, 0.1, 0.5, 0.1, 0.1, 0.5, 0.1, 0.1};
  CHECK(select_winner(l, 0.2, 1.0, {}, WeightSet{})->sector == 2);
}

TEST_CASE("winner selection is invariant to positive scaling at threshold 0") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    SaliencyMap l;
    for (double& v : l.values) v = rng.uniform(0.0, 1.0);
    const double scale = rng.uniform(0.01, 50.0);
    SaliencyMap scaled;
    for (int s = 0; s < 8; ++s) scaled.values[s] = l.values[s] * scale;
    const auto a = select_winner(l, 0.0, 0.0, {}, WeightSet{});
    const auto b = select_winner(scaled, 0.0, 0.0, {}, WeightSet{});
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->sector == b->sector);
  }
}

TEST_CASE("bottom-up chronometry at fine resolution: 150/150/300 ms phases") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  double t = 0.0;
  bool first = true;
  std::vector<std::pair<double, double>> samples;  // (time, modulation at sector 4)
  for (int i = 0; i < 16; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(4)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
    t += dt;
    samples.emplace_back(t, state.sectors[4].modulation);
  }
  for (const auto& [time, mod] : samples) {
    if (time < 0.15 - 1e-9) CHECK(mod == 0.0);
    else if (time < 0.30 - 1e-9) CHECK(mod == doctest::Approx(1.0));
    else if (time < 0.60 - 1e-9) CHECK(mod < 0.0);
    else CHECK(mod == 0.0);
  }
  // inhibition depth right at onset, linear decay afterwards
  CHECK(samples[5].second == doctest::Approx(-0.6));          // t = 0.30
  CHECK(samples[10].second == doctest::Approx(-0.1));         // t = 0.55
}

TEST_CASE("bottom-up chronometry at dt=0.1 stays within one dt of nominal") {
  const double dt = 0.1;
  ChronometryParams params;
  AttentionalState state;
  bool first = true;
  double enhance_start = -1, inhibit_start = -1, idle_start = -1;
  double prev = 0.0;
  for (int i = 1; i <= 12; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(2)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
    const double t = i * dt;
    const double mod = state.sectors[2].modulation;
    if (enhance_start < 0 && mod > 0) enhance_start = t;
    if (inhibit_start < 0 && mod < 0) inhibit_start = t;
    if (idle_start < 0 && inhibit_start > 0 && mod == 0.0 && prev < 0) idle_start = t;
    prev = mod;
  }
  CHECK(std::abs(enhance_start - 0.15) <= dt + 1e-9);
  CHECK(std::abs(inhibit_start - 0.30) <= dt + 1e-9);
  CHECK(std::abs(idle_start - 0.60) <= dt + 1e-9);
}

TEST_CASE("top-down chronometry: onset at 200 ms, hold, vigilance at 6 s") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  const auto support = support_at(5, 0.6);
  bool first = true;
  double t = 0.0;
  double active_start = -1, adapted_start = -1;
  while (t < 7.0) {
    update_attention(state, first ? std::optional<WinnerEvent>(td_winner(5)) : std::nullopt,
                     support, params, dt);
    first = false;
    t += dt;
    const double mod = state.sectors[5].modulation;
    CHECK(mod >= 0.0);  // no impairment anywhere on the top-down course
    if (active_start < 0 && mod > 0.99) active_start = t;
    if (adapted_start < 0 && active_start > 0 && mod < 0.99 && mod > 0.0) adapted_start = t;
  }
  CHECK(std::abs(active_start - 0.20) <= dt + 1e-9);
  // attendance starts at TdActive; adaptation engages 6 s later
  CHECK(std::abs(adapted_start - 6.20) <= dt + 1e-9);
  CHECK(state.sectors[5].modulation == doctest::Approx(0.5));
}

TEST_CASE("top-down release: near zero within td_release of support lapse") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  bool first = true;
  for (int i = 0; i < 20; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(td_winner(1)) : std::nullopt,
                     support_at(1, 0.6), params, dt);
    first = false;
  }
  CHECK(state.sectors[1].modulation == doctest::Approx(1.0));
  // support lapses
  double t_since = 0.0;
  while (state.sectors[1].modulation != 0.0) {
    update_attention(state, std::nullopt, kNoSupport, params, dt);
    t_since += dt;
    CHECK(state.sectors[1].modulation >= 0.0);  // decays without an inhibited phase
    REQUIRE(t_since < 1.0);
  }
  CHECK(t_since <= params.td_release + dt + 1e-9);
}

TEST_CASE("adaptation recovers after one second unattended") {
  const double dt = 0.1;
  ChronometryParams params;
  params.vigilance_limit = 0.5;  // shorten for the test
  AttentionalState state;
  bool first = true;
  for (int i = 0; i < 12; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(td_winner(3)) : std::nullopt,
                     support_at(3, 0.6), params, dt);
    first = false;
  }
  CHECK(state.sectors[3].phase == Phase::TdAdapted);
  // release and stay unattended past the recovery horizon
  for (int i = 0; i < 15; ++i) update_attention(state, std::nullopt, kNoSupport, params, dt);
  CHECK(state.sectors[3].phase == Phase::Idle);
  // a fresh episode starts unadapted
  update_attention(state, td_winner(3), support_at(3, 0.6), params, dt);
  for (int i = 0; i < 3; ++i) update_attention(state, std::nullopt, support_at(3, 0.6), params, dt);
  CHECK(state.sectors[3].phase == Phase::TdActive);
  CHECK(state.sectors[3].modulation == doctest::Approx(1.0));
}

TEST_CASE("repeated wins extend enhancement up to twice its base span") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  // keep winning every tick
  double t = 0.0;
  double inhibit_start = -1;
  for (int i = 0; i < 30; ++i) {
    update_attention(state, bu_winner(4), kNoSupport, params, dt);
    t += dt;
    if (inhibit_start < 0 && state.sectors[4].modulation < 0) inhibit_start = t;
  }
  REQUIRE(inhibit_start > 0);
  // base would flip at 0.30; the cap allows 0.15 + 2*0.15 = 0.45
  CHECK(inhibit_start > 0.30 + 1e-9);
  CHECK(inhibit_start <= 0.15 + 2.0 * params.bu_enhance + dt + 1e-9);
}

TEST_CASE("lateral excitation is maximal at the winner and non-increasing outward") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  bool first = true;
  for (int i = 0; i < 5; ++i) {  // through onset into enhancement
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(4)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
  }
  REQUIRE(state.sectors[4].phase == Phase::Enhanced);
  const auto& sectors = state.sectors;
  CHECK(sectors[4].modulation == doctest::Approx(1.0));
  CHECK(sectors[3].modulation == doctest::Approx(std::exp(-0.5)));
  CHECK(sectors[5].modulation == doctest::Approx(std::exp(-0.5)));
  CHECK(sectors[2].modulation == doctest::Approx(std::exp(-2.0)));
  for (int k = 1; k < 4; ++k) CHECK(sectors[4 + k].modulation <= sectors[4 + k - 1].modulation + 1e-12);
}

TEST_CASE("lateral excitation does not lift an inhibited sector") {
  const double dt = 0.05;
  ChronometryParams params;
  AttentionalState state;
  // drive sector 2 through its full episode into inhibition
  bool first = true;
  for (int i = 0; i < 7; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(2)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
  }
  REQUIRE(state.sectors[2].phase == Phase::Inhibited);
  // now enhance the neighbor
  first = true;
  for (int i = 0; i < 4; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(3)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
    if (state.sectors[2].phase == Phase::Inhibited) CHECK(state.sectors[2].modulation < 0.0);
  }
}

TEST_CASE("no winners is a fixed point") {
  AttentionalState state;
  ChronometryParams params;
  for (int i = 0; i < 100; ++i) update_attention(state, std::nullopt, kNoSupport, params, 0.1);
  for (const auto& s : state.sectors) {
    CHECK(s.modulation == 0.0);
    CHECK(s.phase == Phase::Idle);
  }
}

TEST_CASE("inhibition follows enhancement and stays negative for its full span") {
  const double dt = 0.1;
  ChronometryParams params;
  AttentionalState state;
  bool first = true;
  bool saw_inhibited = false;
  for (int i = 0; i < 12; ++i) {
    update_attention(state, first ? std::optional<WinnerEvent>(bu_winner(6)) : std::nullopt,
                     kNoSupport, params, dt);
    first = false;
    if (state.sectors[6].phase == Phase::Inhibited) {
      saw_inhibited = true;
      CHECK(state.sectors[6].modulation < 0.0);
    }
  }
  CHECK(saw_inhibited);
}

TEST_CASE("modulation stays in [-1,1] under random event storms") {
  Rng rng(77);
  ChronometryParams params;
  AttentionalState state;
  for (int i = 0; i < 20000; ++i) {
    std::optional<WinnerEvent> winner;
    if (rng.uniform01() < 0.4) {
      winner = WinnerEvent{0.0, rng.uniform_int(0, 7), 1.0,
                           rng.uniform01() < 0.5 ? WinnerSource::BottomUp : WinnerSource::TopDown};
    }
    std::array<double, 8> support{};
    for (double& s : support) s = rng.uniform01() < 0.3 ? rng.uniform(0.0, 1.0) : 0.0;
    update_attention(state, winner, support, params, 0.05 + rng.uniform01() * 0.1);
    for (const auto& s : state.sectors) {
      CHECK(s.modulation >= -1.0);
      CHECK(s.modulation <= 1.0);
    }
  }
}
