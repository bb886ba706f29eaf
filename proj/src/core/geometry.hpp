#pragma once

#include <cmath>
#include <optional>

namespace attentive {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
  }
};

// Maps any angle into (-pi, pi].
inline double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  return r;
}

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians, normalized to (-pi, pi]

  Vec2 position() const { return {x, y}; }
};

inline constexpr double kRayEpsilon = 1e-9;

// Smallest positive t with origin + t*dir on the circle, if any.
inline std::optional<double> ray_circle_intersection(const Vec2& origin, const Vec2& dir,
                                                     const Vec2& center, double radius) {
  const Vec2 oc = origin - center;
  const double b = oc.dot(dir);
  const double c = oc.dot(oc) - radius * radius;
  const double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  double t = -b - root;
  if (t < kRayEpsilon) t = -b + root;
  if (t < kRayEpsilon) return std::nullopt;
  return t;
}

// Smallest positive t with origin + t*dir on segment p1-p2, if any.
inline std::optional<double> ray_segment_intersection(const Vec2& origin, const Vec2& dir,
                                                      const Vec2& p1, const Vec2& p2) {
  const Vec2 e = p2 - p1;
  const double denom = dir.cross(e);
  if (std::abs(denom) < 1e-12) return std::nullopt;  // parallel
  const Vec2 w = p1 - origin;
  const double t = w.cross(e) / denom;
  const double u = w.cross(dir) / denom;
  if (t < kRayEpsilon || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

}  // namespace attentive
