#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace attentive {

enum class ShapeKind { Circle, Segment };

struct Shape {
  ShapeKind kind = ShapeKind::Circle;
  double radius = 0.25;  // circles
  Vec2 p1, p2;           // segments, absolute world coordinates

  static Shape circle(double radius) { return Shape{ShapeKind::Circle, radius, {}, {}}; }
  static Shape segment(Vec2 a, Vec2 b) { return Shape{ShapeKind::Segment, 0.0, a, b}; }
};

struct TrajectoryPoint {
  Vec2 waypoint;
  double speed = 0.0;  // m/s toward this waypoint
};

struct Entity {
  std::string id;
  Shape shape;
  Pose pose;
  std::vector<TrajectoryPoint> trajectory;  // empty = stationary
  double start_time = 0.0;                  // trajectory inactive before this
  std::size_t next_waypoint = 0;
};

struct World {
  std::vector<Entity> entities;
  Pose attentive_pose{0.0, 0.0, M_PI / 2.0};
  double max_speed = 2.0;  // m/s, normalizer for motion features
  double dt = 0.1;
  double time = 0.0;
  long tick = 0;
};

// Advances every entity along its trajectory by speed*dt. A waypoint
// reached within the step snaps exactly onto it (no overshoot carry).
void step(World& world);

// Smallest positive hit distance of the ray against any entity, or
// nullopt when nothing is hit.
std::optional<double> cast_ray(const World& world, const Vec2& origin, double angle);

}  // namespace attentive
