#include "core/scenario.hpp"

namespace attentive {

namespace {

struct PresetEntry {
  const char* name;
  const char* json;
};

const PresetEntry kPresets[] = {
#include "presets_data.inc"
};

constexpr std::size_t kPresetCount = sizeof(kPresets) / sizeof(kPresets[0]);

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kPresets) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

bool is_preset(const std::string& name) {
  for (const auto& entry : kPresets)
    if (name == entry.name) return true;
  return false;
}

Scenario make_preset(const std::string& name) {
  for (const auto& entry : kPresets)
    if (name == entry.name) return scenario_from_json(entry.json);
  std::string message = "unknown preset '" + name + "'; available:";
  for (const auto& entry : kPresets) message += std::string(" ") + entry.name;
  throw std::out_of_range(message);
}

}  // namespace attentive
