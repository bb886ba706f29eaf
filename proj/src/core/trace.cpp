#include "core/trace.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace attentive {

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open for writing: " + path.string());
  }

  void row(const std::string& line) { out_ << line << '\n'; }

  ~CsvFile() = default;

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

std::string index_header(int n) {
  std::string header = "time_s";
  for (int i = 0; i < n; ++i) header += ",index_" + std::to_string(i);
  return header;
}

template <typename Values>
std::string values_row(double time, const Values& values, std::size_t n) {
  std::string line = fmt9(time);
  for (std::size_t i = 0; i < n; ++i) {
    line += ',';
    line += fmt9(values[i]);
  }
  return line;
}

int map_length(const RunTrace& trace, const std::string& name) {
  for (const auto& tick : trace.ticks)
    for (const auto& map : tick.maps)
      if (map.name == name) return static_cast<int>(map.values.size());
  // Never materialized in this run (e.g. a goal window that never opened).
  return (name == "distance" || name == "goal_distance") ? kBeamCount : kSectorCount;
}

const FeatureMap* find_map(const TickRecord& tick, const std::string& name) {
  for (const auto& map : tick.maps)
    if (map.name == name) return &map;
  return nullptr;
}

}  // namespace

void export_csv(const RunTrace& trace, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

  {
    CsvFile f(out_dir / "observations_sonar.csv");
    f.row(index_header(kSectorCount));
    for (const auto& t : trace.ticks) f.row(values_row(t.time, t.sonar.readings, kSectorCount));
  }
  {
    CsvFile f(out_dir / "observations_range.csv");
    f.row(index_header(kBeamCount));
    for (const auto& t : trace.ticks) f.row(values_row(t.time, t.range.readings, kBeamCount));
  }

  for (const auto& name : trace.map_names) {
    const int n = map_length(trace, name);
    CsvFile f(out_dir / ("feature_" + name + ".csv"));
    f.row(index_header(n));
    const std::vector<double> zeros(static_cast<std::size_t>(n), 0.0);
    for (const auto& t : trace.ticks) {
      const FeatureMap* map = find_map(t, name);
      f.row(values_row(t.time, map ? map->values : zeros, static_cast<std::size_t>(n)));
    }
  }

  {
    CsvFile f(out_dir / "combined.csv");
    f.row(index_header(kSectorCount));
    for (const auto& t : trace.ticks) f.row(values_row(t.time, t.combined.values, kSectorCount));
  }
  {
    CsvFile f(out_dir / "attentional.csv");
    f.row(index_header(kSectorCount));
    for (const auto& t : trace.ticks) f.row(values_row(t.time, t.modulation, kSectorCount));
  }
  {
    CsvFile f(out_dir / "saliency.csv");
    f.row(index_header(kSectorCount));
    for (const auto& t : trace.ticks) f.row(values_row(t.time, t.saliency.values, kSectorCount));
  }
  {
    CsvFile f(out_dir / "winners.csv");
    f.row("time_s,sector,saliency,source");
    for (const auto& w : trace.winners)
      f.row(fmt9(w.time) + "," + std::to_string(w.sector) + "," + fmt9(w.saliency) + "," +
            (w.source == WinnerSource::TopDown ? "top_down" : "bottom_up"));
  }

  {
    CsvFile f(out_dir / "plot_data.csv");
    f.row("time_s,series,index,value");
    const auto emit = [&](double time, const std::string& series, int index, double value) {
      f.row(fmt9(time) + "," + series + "," + std::to_string(index) + "," + fmt9(value));
    };
    for (const auto& t : trace.ticks) {
      for (int i = 0; i < kSectorCount; ++i) emit(t.time, "observations_sonar", i, t.sonar.readings[i]);
      for (int i = 0; i < kBeamCount; ++i) emit(t.time, "observations_range", i, t.range.readings[i]);
      for (const auto& name : trace.map_names) {
        if (const FeatureMap* map = find_map(t, name)) {
          for (std::size_t i = 0; i < map->values.size(); ++i)
            emit(t.time, "feature_" + name, static_cast<int>(i), map->values[i]);
        }
      }
      for (int i = 0; i < kSectorCount; ++i) emit(t.time, "combined", i, t.combined.values[i]);
      for (int i = 0; i < kSectorCount; ++i) emit(t.time, "attentional", i, t.modulation[i]);
      for (int i = 0; i < kSectorCount; ++i) emit(t.time, "saliency", i, t.saliency.values[i]);
    }
  }

  {
    std::ofstream f(out_dir / "scenario.json", std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + (out_dir / "scenario.json").string());
    f << scenario_to_json(trace.scenario);
  }
}

}  // namespace attentive
