#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "core/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/trace.hpp"
#include "doctest.h"

using namespace attentive;
namespace fs = std::filesystem;

namespace {

Scenario empty_world_scenario() {
  Scenario sc;
  sc.name = "empty";
  sc.seed = 11;
  sc.duration = 10.0;
  sc.features.active = {DimensionTag::Motion, DimensionTag::Distance};
  return sc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("attentive_test_" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("a static empty world produces no winners") {
  const RunTrace trace = run(empty_world_scenario());
  CHECK(trace.ticks.size() == 100);
  CHECK(trace.winners.empty());
  for (const auto& tick : trace.ticks) {
    for (const auto& map : tick.maps)
      for (double v : map.values) CHECK(v == 0.0);
    for (double m : tick.modulation) CHECK(m == 0.0);
  }
}

TEST_CASE("cold start emits zero differencing maps until history is deep enough") {
  Scenario sc = empty_world_scenario();
  Entity target;
  target.id = "t";
  target.shape = Shape::circle(0.25);
  target.pose = Pose{0.0, 3.0, 0.0};
  target.trajectory.push_back({{0.0, 0.5}, 0.9});
  sc.world.entities.push_back(target);
  sc.features.active = {DimensionTag::Motion};
  sc.features.smoothing_frames = 3;
  sc.features.differencing_lag = 4;
  sc.noise.enabled = false;

  const RunTrace trace = run(sc);
  // history depth needed: lag + smoothing = 7 frames; the t=0 frame plus five
  // ticks is still one short, so ticks 1..5 must stay silent
  for (int i = 0; i < 5; ++i)
    for (double v : trace.ticks[i].maps[0].values) CHECK(v == 0.0);
  bool any_nonzero = false;
  for (std::size_t i = 5; i < trace.ticks.size(); ++i)
    for (double v : trace.ticks[i].maps[0].values) any_nonzero |= v > 0.0;
  CHECK(any_nonzero);
}

TEST_CASE("runs are deterministic: identical winner sequences and modulation traces") {
  const Scenario sc = make_preset("exp01");
  const RunTrace a = run(sc);
  const RunTrace b = run(sc);
  REQUIRE(a.winners.size() == b.winners.size());
  for (std::size_t i = 0; i < a.winners.size(); ++i) {
    CHECK(a.winners[i].time == b.winners[i].time);
    CHECK(a.winners[i].sector == b.winners[i].sector);
    CHECK(a.winners[i].saliency == b.winners[i].saliency);
  }
  for (std::size_t t = 0; t < a.ticks.size(); ++t)
    CHECK(a.ticks[t].modulation == b.ticks[t].modulation);
}

TEST_CASE("changing the seed changes the noise stream") {
  Scenario sc = make_preset("exp01");
  const RunTrace a = run(sc);
  sc.seed += 1;
  const RunTrace b = run(sc);
  bool any_diff = false;
  for (std::size_t t = 0; t < a.ticks.size(); ++t)
    if (a.ticks[t].sonar.readings != b.ticks[t].sonar.readings) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("csv export: stable schemas, reproducible bytes, parseable values") {
  Scenario sc = make_preset("exp01");
  sc.duration = 2.0;
  const RunTrace trace = run(sc);

  const fs::path dir_a = temp_dir("a");
  const fs::path dir_b = temp_dir("b");
  export_csv(trace, dir_a);
  export_csv(run(sc), dir_b);

  const char* files[] = {"observations_sonar.csv", "observations_range.csv", "feature_motion.csv",
                         "combined.csv",           "attentional.csv",        "saliency.csv",
                         "winners.csv",            "plot_data.csv",          "scenario.json"};
  for (const char* name : files) {
    CAPTURE(name);
    REQUIRE(fs::exists(dir_a / name));
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));
  }

  // headers are pinned
  {
    std::ifstream in(dir_a / "winners.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "time_s,sector,saliency,source");
  }
  {
    std::ifstream in(dir_a / "combined.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("time_s,index_0,index_1", 0) == 0);
    CHECK(header.find("index_7") != std::string::npos);

    // round-trip: parsed values match the trace to 9 significant digits
    std::string line;
    std::size_t tick = 0;
    while (std::getline(in, line) && tick < trace.ticks.size()) {
      std::istringstream row(line);
      std::string cell;
      std::getline(row, cell, ',');
      CHECK(std::abs(std::stod(cell) - trace.ticks[tick].time) <= 1e-9);
      for (int s = 0; s < kSectorCount; ++s) {
        std::getline(row, cell, ',');
        const double expected = trace.ticks[tick].combined.values[s];
        const double tolerance = std::max(1e-12, std::abs(expected) * 1e-8);
        CHECK(std::abs(std::stod(cell) - expected) <= tolerance);
      }
      ++tick;
    }
    CHECK(tick == trace.ticks.size());
  }
  {
    std::ifstream in(dir_a / "observations_range.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header.find("index_179") != std::string::npos);
  }

  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("winners carry the saliency at selection and respect the threshold") {
  Scenario sc = make_preset("exp02");
  sc.duration = 6.0;
  const RunTrace trace = run(sc);
  REQUIRE(!trace.winners.empty());
  for (const auto& w : trace.winners) {
    CHECK(w.saliency >= sc.wta_threshold);
    CHECK(w.sector >= 0);
    CHECK(w.sector < kSectorCount);
  }
}

TEST_CASE("goal maps appear only inside their activation window") {
  Scenario sc;
  sc.name = "windowed";
  sc.seed = 1;
  sc.duration = 4.0;
  sc.noise.enabled = false;
  Entity target;
  target.id = "t";
  target.shape = Shape::circle(0.25);
  target.pose = Pose{0.0, 3.0, 0.0};
  target.trajectory.push_back({{0.0, 1.0}, 0.8});
  sc.world.entities.push_back(target);
  sc.features.active = {DimensionTag::Motion, DimensionTag::GoalSpeed};
  sc.goals.push_back({Goal{GoalQuantity::Speed, GoalRelation::Greater, 0.5, 0.0}, 1.0, 3.0});

  const RunTrace trace = run(sc);
  for (const auto& tick : trace.ticks) {
    const bool has_goal_map =
        std::any_of(tick.maps.begin(), tick.maps.end(),
                    [](const FeatureMap& m) { return m.tag == DimensionTag::GoalSpeed; });
    const bool in_window = tick.time >= 1.0 && tick.time < 3.0;
    CHECK(has_goal_map == in_window);
  }
}
