#pragma once

#include <filesystem>

#include "core/pipeline.hpp"

namespace attentive {

// Writes the per-panel CSV files plus a long-format plot file into
// out_dir (created if missing):
//   observations_sonar.csv   time_s,index_0..index_7
//   observations_range.csv   time_s,index_0..index_179
//   feature_<name>.csv       time_s,index_0..index_{N-1}
//   combined.csv             time_s,index_0..index_7
//   attentional.csv          time_s,index_0..index_7   (modulation)
//   saliency.csv             time_s,index_0..index_7
//   winners.csv              time_s,sector,saliency,source
//   plot_data.csv            time_s,series,index,value
//   scenario.json            the scenario that produced the trace
// Numbers are printed with 9 significant digits and '\n' line endings so
// exports are byte-reproducible.
void export_csv(const RunTrace& trace, const std::filesystem::path& out_dir);

}  // namespace attentive
