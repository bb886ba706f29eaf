#include "attentive/attentive.h"

#include <cstring>
#include <string>

#include "core/pipeline.hpp"
#include "core/scenario.hpp"
#include "core/trace.hpp"

namespace {

thread_local std::string g_last_error;

atn_status fail(atn_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
atn_status run_guarded(Fn&& fn) {
  try {
    fn();
    return ATN_OK;
  } catch (const attentive::ValidationError& e) {
    return fail(ATN_ERROR_VALIDATION, e.what());
  } catch (const attentive::ParseError& e) {
    return fail(ATN_ERROR_PARSE, e.what());
  } catch (const attentive::IoError& e) {
    return fail(ATN_ERROR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ATN_ERROR_UNKNOWN_PRESET, e.what());
  } catch (const std::exception& e) {
    return fail(ATN_ERROR_INVALID_ARGUMENT, e.what());
  }
}

}  // namespace

struct atn_scenario {
  attentive::Scenario scenario;
};

struct atn_trace {
  attentive::RunTrace trace;
};

extern "C" {

const char* atn_version(void) { return "1.0.0"; }

const char* atn_last_error(void) { return g_last_error.c_str(); }

size_t atn_preset_count(void) { return attentive::preset_names().size(); }

const char* atn_preset_name(size_t index) {
  const auto& names = attentive::preset_names();
  if (index >= names.size()) return nullptr;
  return names[index].c_str();
}

atn_status atn_scenario_from_preset(const char* name, atn_scenario** out) {
  if (!name || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return run_guarded([&] { *out = new atn_scenario{attentive::make_preset(name)}; });
}

atn_status atn_scenario_load_file(const char* path, atn_scenario** out) {
  if (!path || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return run_guarded([&] { *out = new atn_scenario{attentive::load_scenario_file(path)}; });
}

atn_status atn_scenario_load_string(const char* json_text, atn_scenario** out) {
  if (!json_text || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return run_guarded([&] { *out = new atn_scenario{attentive::scenario_from_json(json_text)}; });
}

void atn_scenario_free(atn_scenario* scenario) { delete scenario; }

atn_status atn_scenario_set_seed(atn_scenario* scenario, uint64_t seed) {
  if (!scenario) return fail(ATN_ERROR_INVALID_ARGUMENT, "null scenario");
  scenario->scenario.seed = seed;
  return ATN_OK;
}

atn_status atn_scenario_set_noise_enabled(atn_scenario* scenario, int enabled) {
  if (!scenario) return fail(ATN_ERROR_INVALID_ARGUMENT, "null scenario");
  scenario->scenario.noise.enabled = enabled != 0;
  return ATN_OK;
}

atn_status atn_scenario_set_wta_threshold(atn_scenario* scenario, double threshold) {
  if (!scenario) return fail(ATN_ERROR_INVALID_ARGUMENT, "null scenario");
  if (threshold < 0.0) return fail(ATN_ERROR_INVALID_ARGUMENT, "wta threshold must be >= 0");
  scenario->scenario.wta_threshold = threshold;
  return ATN_OK;
}

atn_status atn_scenario_validate(const atn_scenario* scenario) {
  if (!scenario) return fail(ATN_ERROR_INVALID_ARGUMENT, "null scenario");
  const auto problems = attentive::validate(scenario->scenario);
  if (problems.empty()) return ATN_OK;
  return fail(ATN_ERROR_VALIDATION, attentive::ValidationError(problems).what());
}

atn_status atn_run(const atn_scenario* scenario, atn_trace** out) {
  if (!scenario || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return run_guarded([&] { *out = new atn_trace{attentive::run(scenario->scenario)}; });
}

void atn_trace_free(atn_trace* trace) { delete trace; }

size_t atn_trace_tick_count(const atn_trace* trace) {
  return trace ? trace->trace.ticks.size() : 0;
}

double atn_trace_time_at(const atn_trace* trace, size_t tick) {
  if (!trace || tick >= trace->trace.ticks.size()) return -1.0;
  return trace->trace.ticks[tick].time;
}

atn_status atn_trace_sector_values(const atn_trace* trace, atn_series series, size_t tick,
                                   double out[ATN_SECTOR_COUNT]) {
  if (!trace || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  if (tick >= trace->trace.ticks.size())
    return fail(ATN_ERROR_INVALID_ARGUMENT, "tick index out of range");
  const auto& record = trace->trace.ticks[tick];
  switch (series) {
    case ATN_SERIES_COMBINED:
      std::memcpy(out, record.combined.values.data(), sizeof(double) * ATN_SECTOR_COUNT);
      return ATN_OK;
    case ATN_SERIES_MODULATION:
      std::memcpy(out, record.modulation.data(), sizeof(double) * ATN_SECTOR_COUNT);
      return ATN_OK;
    case ATN_SERIES_SALIENCY:
      std::memcpy(out, record.saliency.values.data(), sizeof(double) * ATN_SECTOR_COUNT);
      return ATN_OK;
  }
  return fail(ATN_ERROR_INVALID_ARGUMENT, "unknown series");
}

size_t atn_trace_winner_count(const atn_trace* trace) {
  return trace ? trace->trace.winners.size() : 0;
}

atn_status atn_trace_get_winner(const atn_trace* trace, size_t index, atn_winner* out) {
  if (!trace || !out) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  if (index >= trace->trace.winners.size())
    return fail(ATN_ERROR_INVALID_ARGUMENT, "winner index out of range");
  const auto& w = trace->trace.winners[index];
  out->time_s = w.time;
  out->sector = w.sector;
  out->saliency = w.saliency;
  out->top_down = w.source == attentive::WinnerSource::TopDown ? 1 : 0;
  return ATN_OK;
}

atn_status atn_trace_export_csv(const atn_trace* trace, const char* out_dir) {
  if (!trace || !out_dir) return fail(ATN_ERROR_INVALID_ARGUMENT, "null argument");
  return run_guarded([&] { attentive::export_csv(trace->trace, out_dir); });
}

}  // extern "C"
