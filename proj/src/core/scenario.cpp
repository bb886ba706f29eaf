#include "core/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace attentive {

using nlohmann::json;

ValidationError::ValidationError(std::vector<std::string> problems_in)
    : std::runtime_error([&problems_in] {
        std::string joined = "scenario validation failed:";
        for (const auto& p : problems_in) joined += "\n  - " + p;
        return joined;
      }()),
      problems(std::move(problems_in)) {}

namespace {

DimensionTag tag_from_string(const std::string& s) {
  if (s == "motion") return DimensionTag::Motion;
  if (s == "direction") return DimensionTag::Direction;
  if (s == "distance") return DimensionTag::Distance;
  if (s == "goal_speed") return DimensionTag::GoalSpeed;
  if (s == "goal_direction") return DimensionTag::GoalDirection;
  if (s == "goal_distance") return DimensionTag::GoalDistance;
  throw ParseError("unknown feature dimension '" + s + "'");
}

GoalQuantity quantity_from_string(const std::string& s) {
  if (s == "speed") return GoalQuantity::Speed;
  if (s == "direction") return GoalQuantity::Direction;
  if (s == "distance") return GoalQuantity::Distance;
  throw ParseError("unknown goal quantity '" + s + "'");
}

GoalRelation relation_from_string(const std::string& s) {
  if (s == "equal") return GoalRelation::Equal;
  if (s == "between") return GoalRelation::Between;
  if (s == "greater") return GoalRelation::Greater;
  if (s == "smaller") return GoalRelation::Smaller;
  throw ParseError("unknown goal relation '" + s + "'");
}

const char* quantity_to_string(GoalQuantity q) {
  switch (q) {
    case GoalQuantity::Speed: return "speed";
    case GoalQuantity::Direction: return "direction";
    case GoalQuantity::Distance: return "distance";
  }
  return "speed";
}

const char* relation_to_string(GoalRelation r) {
  switch (r) {
    case GoalRelation::Equal: return "equal";
    case GoalRelation::Between: return "between";
    case GoalRelation::Greater: return "greater";
    case GoalRelation::Smaller: return "smaller";
  }
  return "equal";
}

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed,
                std::vector<std::string>& problems) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return it.key() == k; }) == allowed.end()) {
      problems.push_back(std::string(where) + ": unknown field '" + it.key() + "'");
    }
  }
}

Vec2 parse_point(const json& obj) { return Vec2{obj.at("x").get<double>(), obj.at("y").get<double>()}; }

Entity parse_entity(const json& obj, std::vector<std::string>& problems) {
  check_keys(obj, "entity",
             {"id", "shape", "position", "heading_rad", "start_time_s", "trajectory"}, problems);
  Entity entity;
  entity.id = obj.value("id", "entity");

  const json& shape = obj.at("shape");
  const std::string kind = shape.at("type").get<std::string>();
  if (kind == "circle") {
    entity.shape = Shape::circle(shape.at("radius_m").get<double>());
    const json& pos = obj.at("position");
    entity.pose.x = pos.at("x").get<double>();
    entity.pose.y = pos.at("y").get<double>();
    entity.pose.heading = normalize_angle(obj.value("heading_rad", 0.0));
  } else if (kind == "segment") {
    entity.shape = Shape::segment(parse_point(shape.at("p1")), parse_point(shape.at("p2")));
    entity.pose.x = 0.5 * (entity.shape.p1.x + entity.shape.p2.x);
    entity.pose.y = 0.5 * (entity.shape.p1.y + entity.shape.p2.y);
  } else {
    throw ParseError("entity '" + entity.id + "': unknown shape type '" + kind + "'");
  }

  entity.start_time = obj.value("start_time_s", 0.0);
  if (obj.contains("trajectory")) {
    for (const json& leg : obj.at("trajectory")) {
      TrajectoryPoint point;
      point.waypoint = parse_point(leg);
      point.speed = leg.at("speed_mps").get<double>();
      entity.trajectory.push_back(point);
    }
  }
  return entity;
}

}  // namespace

std::vector<std::string> validate(const Scenario& sc) {
  std::vector<std::string> problems;
  const auto require = [&](bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
  };

  require(sc.duration > 0.0, "duration_s must be > 0");
  require(sc.dt > 0.0, "dt_s must be > 0");
  require(std::isfinite(sc.duration) && std::isfinite(sc.dt), "duration_s/dt_s must be finite");
  require(sc.world.max_speed > 0.0, "world.max_speed_mps must be > 0");
  require(sc.window_frames >= 2, "memory.window_frames must be >= 2");
  require(sc.noise.relative_sigma >= 0.0, "sensors.relative_sigma must be >= 0");
  require(sc.wta_threshold >= 0.0, "wta_threshold must be >= 0");
  require(sc.global_gain >= 0.0, "global_gain must be >= 0");

  const auto& f = sc.features;
  require(!f.active.empty(), "features.active must list at least one dimension");
  require(f.smoothing_frames >= 1, "features.smoothing_frames must be >= 1");
  require(f.differencing_lag >= 1, "features.differencing_lag must be >= 1");
  require(f.direction_deadband >= 0.0, "features.direction_deadband_mps must be >= 0");
  require(f.equal_tolerance >= 0.0, "features.equal_tolerance must be >= 0");
  require(sc.window_frames >=
              static_cast<std::size_t>(f.smoothing_frames + f.differencing_lag),
          "memory.window_frames must cover smoothing_frames + differencing_lag");
  require(!f.distance_sources.empty(), "features.distance_sources must not be empty");
  for (const auto& src : f.distance_sources)
    require(src == "range" || src == "sonar",
            "features.distance_sources entries must be 'range' or 'sonar' (got '" + src + "')");

  bool any_weight = false;
  for (DimensionTag tag : f.active) {
    const double w = sc.weights.get(tag);
    require(w >= 0.0 && std::isfinite(w),
            std::string("weights.") + dimension_tag_name(tag) + " must be finite and >= 0");
    if (w > 0.0) any_weight = true;
  }
  require(!f.active.empty() ? any_weight : true,
          "at least one active dimension must have a positive weight");

  for (std::size_t i = 0; i < sc.world.entities.size(); ++i) {
    const Entity& e = sc.world.entities[i];
    const std::string where = "entity '" + e.id + "'";
    if (e.shape.kind == ShapeKind::Circle)
      require(e.shape.radius > 0.0, where + ": circle radius must be > 0");
    require(e.start_time >= 0.0, where + ": start_time_s must be >= 0");
    for (const auto& leg : e.trajectory) {
      require(leg.speed > 0.0, where + ": trajectory speeds must be > 0 (omit legs to stay put)");
      require(leg.speed <= sc.world.max_speed + 1e-12,
              where + ": trajectory speed exceeds world.max_speed_mps");
    }
  }

  const auto dim_active = [&](DimensionTag tag) {
    return std::find(f.active.begin(), f.active.end(), tag) != f.active.end();
  };
  bool has_goal[3] = {false, false, false};
  for (const auto& tg : sc.goals) {
    const std::string where = std::string("goal (") + quantity_to_string(tg.goal.quantity) + ")";
    has_goal[static_cast<int>(tg.goal.quantity)] = true;
    require(tg.t_start >= 0.0 && tg.t_end <= sc.duration && tg.t_start < tg.t_end,
            where + ": activation window must satisfy 0 <= t_start < t_end <= duration_s");
    if (tg.goal.relation == GoalRelation::Between)
      require(tg.goal.delta > 0.0, where + ": BETWEEN requires delta > 0");
    if (tg.goal.quantity == GoalQuantity::Direction) {
      require(tg.goal.relation == GoalRelation::Equal, where + ": direction admits only EQUAL");
      const double d = tg.goal.desired;
      require(d == -1.0 || d == 0.0 || d == 1.0, where + ": desired must be -1, 0 or +1");
    } else {
      require(tg.goal.desired >= 0.0, where + ": desired must be >= 0");
    }
    const DimensionTag tag = tg.goal.quantity == GoalQuantity::Speed ? DimensionTag::GoalSpeed
                             : tg.goal.quantity == GoalQuantity::Direction
                                 ? DimensionTag::GoalDirection
                                 : DimensionTag::GoalDistance;
    require(dim_active(tag), where + ": dimension " + std::string(dimension_tag_name(tag)) +
                                 " is not in features.active");
  }
  // Overlapping same-quantity windows would make the active goal ambiguous.
  for (std::size_t i = 0; i < sc.goals.size(); ++i) {
    for (std::size_t j = i + 1; j < sc.goals.size(); ++j) {
      const auto& a = sc.goals[i];
      const auto& b = sc.goals[j];
      if (a.goal.quantity != b.goal.quantity) continue;
      if (a.t_start < b.t_end && b.t_start < a.t_end)
        problems.push_back("goals: overlapping activation windows for quantity " +
                           std::string(quantity_to_string(a.goal.quantity)));
    }
  }
  if (dim_active(DimensionTag::GoalSpeed))
    require(has_goal[0], "features.active lists goal_speed but no speed goal is defined");
  if (dim_active(DimensionTag::GoalDirection))
    require(has_goal[1], "features.active lists goal_direction but no direction goal is defined");
  if (dim_active(DimensionTag::GoalDistance))
    require(has_goal[2], "features.active lists goal_distance but no distance goal is defined");

  const auto& c = sc.chronometry;
  require(c.bu_onset > 0 && c.bu_enhance > 0 && c.ior_duration > 0 && c.td_onset > 0 &&
              c.td_release > 0 && c.vigilance_limit > 0 && c.decay_tau > 0 &&
              c.adaptation_recovery > 0,
          "chronometry durations must be > 0");
  require(c.enhance_amplitude > 0 && c.enhance_amplitude <= 1.0,
          "chronometry.enhance_amplitude must be in (0, 1]");
  require(c.ior_depth >= 0 && c.ior_depth <= 1.0, "chronometry.ior_depth must be in [0, 1]");
  require(c.lateral_sigma > 0, "chronometry.lateral_sigma_sectors must be > 0");
  require(c.adaptation_factor >= 0 && c.adaptation_factor <= 1.0,
          "chronometry.adaptation_factor must be in [0, 1]");

  return problems;
}

Scenario scenario_from_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario parse error: ") + e.what());
  }

  Scenario sc;
  std::vector<std::string> problems;
  try {
    check_keys(root, "scenario",
               {"schema_version", "name", "seed", "duration_s", "dt_s", "world", "sensors",
                "memory", "features", "goals", "weights", "chronometry", "wta_threshold",
                "global_gain"},
               problems);
    if (root.value("schema_version", 1) != 1)
      throw ParseError("unsupported schema_version (expected 1)");

    sc.name = root.value("name", "scenario");
    sc.seed = root.value("seed", 0ULL);
    sc.duration = root.value("duration_s", 10.0);
    sc.dt = root.value("dt_s", 0.1);
    sc.world.dt = sc.dt;

    if (root.contains("world")) {
      const json& w = root.at("world");
      check_keys(w, "world", {"max_speed_mps", "attentive_pose", "entities"}, problems);
      sc.world.max_speed = w.value("max_speed_mps", 2.0);
      if (w.contains("attentive_pose")) {
        const json& p = w.at("attentive_pose");
        sc.world.attentive_pose.x = p.value("x", 0.0);
        sc.world.attentive_pose.y = p.value("y", 0.0);
        sc.world.attentive_pose.heading = normalize_angle(p.value("heading_rad", M_PI / 2.0));
      }
      if (w.contains("entities"))
        for (const json& e : w.at("entities")) sc.world.entities.push_back(parse_entity(e, problems));
    }

    if (root.contains("sensors")) {
      const json& s = root.at("sensors");
      check_keys(s, "sensors", {"noise_enabled", "relative_sigma"}, problems);
      sc.noise.enabled = s.value("noise_enabled", true);
      sc.noise.relative_sigma = s.value("relative_sigma", 0.05);
    }

    if (root.contains("memory")) {
      const json& m = root.at("memory");
      check_keys(m, "memory", {"window_frames"}, problems);
      sc.window_frames = m.value("window_frames", 20U);
    }

    if (root.contains("features")) {
      const json& f = root.at("features");
      check_keys(f, "features",
                 {"active", "distance_sources", "smoothing_frames", "smoothing_kind",
                  "differencing_lag", "direction_deadband_mps", "equal_tolerance"},
                 problems);
      sc.features.active.clear();
      for (const json& d : f.at("active"))
        sc.features.active.push_back(tag_from_string(d.get<std::string>()));
      if (f.contains("distance_sources")) {
        sc.features.distance_sources.clear();
        for (const json& s : f.at("distance_sources"))
          sc.features.distance_sources.push_back(s.get<std::string>());
      }
      sc.features.smoothing_frames = f.value("smoothing_frames", 1);
      const std::string kind = f.value("smoothing_kind", "median");
      if (kind == "mean")
        sc.features.smoothing_kind = SmoothingKind::Mean;
      else if (kind == "median")
        sc.features.smoothing_kind = SmoothingKind::Median;
      else
        throw ParseError("features.smoothing_kind must be 'mean' or 'median'");
      sc.features.differencing_lag = f.value("differencing_lag", 1);
      sc.features.direction_deadband = f.value("direction_deadband_mps", 0.1);
      sc.features.equal_tolerance = f.value("equal_tolerance", 0.02);
    }

    if (root.contains("goals")) {
      for (const json& g : root.at("goals")) {
        check_keys(g, "goal", {"quantity", "relation", "desired", "delta", "t_start_s", "t_end_s"},
                   problems);
        TimedGoal tg;
        tg.goal.quantity = quantity_from_string(g.at("quantity").get<std::string>());
        tg.goal.relation = relation_from_string(g.at("relation").get<std::string>());
        tg.goal.desired = g.at("desired").get<double>();
        tg.goal.delta = g.value("delta", 0.0);
        tg.t_start = g.value("t_start_s", 0.0);
        tg.t_end = g.value("t_end_s", sc.duration);
        sc.goals.push_back(tg);
      }
    }

    if (root.contains("weights")) {
      const json& w = root.at("weights");
      check_keys(w, "weights",
                 {"motion", "direction", "distance", "goal_speed", "goal_direction",
                  "goal_distance"},
                 problems);
      sc.weights.motion = w.value("motion", 1.0);
      sc.weights.direction = w.value("direction", 1.0);
      sc.weights.distance = w.value("distance", 1.0);
      sc.weights.goal_speed = w.value("goal_speed", 1.0);
      sc.weights.goal_direction = w.value("goal_direction", 1.0);
      sc.weights.goal_distance = w.value("goal_distance", 1.0);
    }

    if (root.contains("chronometry")) {
      const json& c = root.at("chronometry");
      check_keys(c, "chronometry",
                 {"bu_onset_s", "bu_enhance_s", "ior_duration_s", "td_onset_s", "td_release_s",
                  "vigilance_limit_s", "enhance_amplitude", "ior_depth", "lateral_sigma_sectors",
                  "decay_tau_s", "adaptation_factor", "adaptation_recovery_s",
                  "td_support_threshold"},
                 problems);
      auto& ch = sc.chronometry;
      ch.bu_onset = c.value("bu_onset_s", ch.bu_onset);
      ch.bu_enhance = c.value("bu_enhance_s", ch.bu_enhance);
      ch.ior_duration = c.value("ior_duration_s", ch.ior_duration);
      ch.td_onset = c.value("td_onset_s", ch.td_onset);
      ch.td_release = c.value("td_release_s", ch.td_release);
      ch.vigilance_limit = c.value("vigilance_limit_s", ch.vigilance_limit);
      ch.enhance_amplitude = c.value("enhance_amplitude", ch.enhance_amplitude);
      ch.ior_depth = c.value("ior_depth", ch.ior_depth);
      ch.lateral_sigma = c.value("lateral_sigma_sectors", ch.lateral_sigma);
      ch.decay_tau = c.value("decay_tau_s", ch.decay_tau);
      ch.adaptation_factor = c.value("adaptation_factor", ch.adaptation_factor);
      ch.adaptation_recovery = c.value("adaptation_recovery_s", ch.adaptation_recovery);
      ch.td_support_threshold = c.value("td_support_threshold", ch.td_support_threshold);
    }

    sc.wta_threshold = root.value("wta_threshold", 0.2);
    sc.global_gain = root.value("global_gain", 1.0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario parse error: ") + e.what());
  }

  auto more = validate(sc);
  problems.insert(problems.end(), more.begin(), more.end());
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

std::string scenario_to_json(const Scenario& sc) {
  json root;
  root["schema_version"] = 1;
  root["name"] = sc.name;
  root["seed"] = sc.seed;
  root["duration_s"] = sc.duration;
  root["dt_s"] = sc.dt;

  json world;
  world["max_speed_mps"] = sc.world.max_speed;
  world["attentive_pose"] = {{"x", sc.world.attentive_pose.x},
                             {"y", sc.world.attentive_pose.y},
                             {"heading_rad", sc.world.attentive_pose.heading}};
  world["entities"] = json::array();
  for (const Entity& e : sc.world.entities) {
    json entity;
    entity["id"] = e.id;
    if (e.shape.kind == ShapeKind::Circle) {
      entity["shape"] = {{"type", "circle"}, {"radius_m", e.shape.radius}};
      entity["position"] = {{"x", e.pose.x}, {"y", e.pose.y}};
    } else {
      entity["shape"] = {{"type", "segment"},
                         {"p1", {{"x", e.shape.p1.x}, {"y", e.shape.p1.y}}},
                         {"p2", {{"x", e.shape.p2.x}, {"y", e.shape.p2.y}}}};
    }
    if (e.start_time != 0.0) entity["start_time_s"] = e.start_time;
    if (!e.trajectory.empty()) {
      entity["trajectory"] = json::array();
      for (const auto& leg : e.trajectory)
        entity["trajectory"].push_back(
            {{"x", leg.waypoint.x}, {"y", leg.waypoint.y}, {"speed_mps", leg.speed}});
    }
    world["entities"].push_back(entity);
  }
  root["world"] = world;

  root["sensors"] = {{"noise_enabled", sc.noise.enabled},
                     {"relative_sigma", sc.noise.relative_sigma}};
  root["memory"] = {{"window_frames", sc.window_frames}};

  json features;
  features["active"] = json::array();
  for (DimensionTag tag : sc.features.active) features["active"].push_back(dimension_tag_name(tag));
  features["distance_sources"] = sc.features.distance_sources;
  features["smoothing_frames"] = sc.features.smoothing_frames;
  features["smoothing_kind"] = sc.features.smoothing_kind == SmoothingKind::Mean ? "mean" : "median";
  features["differencing_lag"] = sc.features.differencing_lag;
  features["direction_deadband_mps"] = sc.features.direction_deadband;
  features["equal_tolerance"] = sc.features.equal_tolerance;
  root["features"] = features;

  root["goals"] = json::array();
  for (const TimedGoal& tg : sc.goals) {
    json g;
    g["quantity"] = quantity_to_string(tg.goal.quantity);
    g["relation"] = relation_to_string(tg.goal.relation);
    g["desired"] = tg.goal.desired;
    if (tg.goal.relation == GoalRelation::Between) g["delta"] = tg.goal.delta;
    g["t_start_s"] = tg.t_start;
    g["t_end_s"] = tg.t_end;
    root["goals"].push_back(g);
  }

  root["weights"] = {{"motion", sc.weights.motion},
                     {"direction", sc.weights.direction},
                     {"distance", sc.weights.distance},
                     {"goal_speed", sc.weights.goal_speed},
                     {"goal_direction", sc.weights.goal_direction},
                     {"goal_distance", sc.weights.goal_distance}};

  const auto& c = sc.chronometry;
  root["chronometry"] = {{"bu_onset_s", c.bu_onset},
                         {"bu_enhance_s", c.bu_enhance},
                         {"ior_duration_s", c.ior_duration},
                         {"td_onset_s", c.td_onset},
                         {"td_release_s", c.td_release},
                         {"vigilance_limit_s", c.vigilance_limit},
                         {"enhance_amplitude", c.enhance_amplitude},
                         {"ior_depth", c.ior_depth},
                         {"lateral_sigma_sectors", c.lateral_sigma},
                         {"decay_tau_s", c.decay_tau},
                         {"adaptation_factor", c.adaptation_factor},
                         {"adaptation_recovery_s", c.adaptation_recovery},
                         {"td_support_threshold", c.td_support_threshold}};

  root["wta_threshold"] = sc.wta_threshold;
  root["global_gain"] = sc.global_gain;
  return root.dump(2) + "\n";
}

}  // namespace attentive
