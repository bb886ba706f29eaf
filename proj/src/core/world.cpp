#include "core/world.hpp"

#include <algorithm>
#include <cmath>

namespace attentive {

namespace {

void advance_entity(Entity& entity, double dt, double now) {
  if (entity.trajectory.empty() || entity.next_waypoint >= entity.trajectory.size()) return;
  if (now < entity.start_time) return;

  const TrajectoryPoint& leg = entity.trajectory[entity.next_waypoint];
  const Vec2 pos{entity.pose.x, entity.pose.y};
  const Vec2 to_wp = leg.waypoint - pos;
  const double dist = to_wp.norm();
  const double reach = leg.speed * dt;

  if (dist <= reach + 1e-12) {
    entity.pose.x = leg.waypoint.x;
    entity.pose.y = leg.waypoint.y;
    entity.next_waypoint += 1;
  } else if (dist > 0.0) {
    const Vec2 dir = to_wp * (1.0 / dist);
    entity.pose.x += dir.x * reach;
    entity.pose.y += dir.y * reach;
    entity.pose.heading = normalize_angle(std::atan2(dir.y, dir.x));
  }
}

}  // namespace

void step(World& world) {
  const double pre_time = world.time;
  for (auto& entity : world.entities) advance_entity(entity, world.dt, pre_time);
  world.tick += 1;
  world.time = static_cast<double>(world.tick) * world.dt;
}

std::optional<double> cast_ray(const World& world, const Vec2& origin, double angle) {
  const Vec2 dir{std::cos(angle), std::sin(angle)};
  std::optional<double> best;
  for (const auto& entity : world.entities) {
    std::optional<double> hit;
    if (entity.shape.kind == ShapeKind::Circle) {
      hit = ray_circle_intersection(origin, dir, entity.pose.position(), entity.shape.radius);
    } else {
      hit = ray_segment_intersection(origin, dir, entity.shape.p1, entity.shape.p2);
    }
    if (hit && (!best || *hit < *best)) best = hit;
  }
  return best;
}

}  // namespace attentive
