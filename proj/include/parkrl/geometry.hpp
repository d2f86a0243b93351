#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace parkrl {

// Ground-plane vector. The vertical axis of the original 3D scene is dropped;
// `z` is the second planar coordinate.
struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
  constexpr Vec2 operator-() const { return {-x, -z}; }
  constexpr Vec2 operator*(double s) const { return {x * s, z * s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.z * b.z; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.z); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Unit vector at `angle` radians, measured counter-clockwise from +x.
inline Vec2 unit_from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline Vec2 rotate(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.z, s * v.x + c * v.z};
}

// Wraps an angle into [-pi, pi).
double wrap_angle(double angle);

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Rectangle with arbitrary orientation. `half_extents.x` runs along the
// heading direction, `half_extents.z` across it.
class OrientedBox {
 public:
  // Throws std::invalid_argument for non-positive or non-finite extents.
  OrientedBox(Vec2 center, Vec2 half_extents, double heading = 0.0);

  const Vec2& center() const { return center_; }
  const Vec2& half_extents() const { return half_extents_; }
  double heading() const { return heading_; }

  // Local unit axes: `axis_u` along the heading, `axis_v` to its left.
  Vec2 axis_u() const { return {cos_, sin_}; }
  Vec2 axis_v() const { return {-sin_, cos_}; }

  // World point -> box frame (u along heading, v across).
  Vec2 to_local(const Vec2& p) const;
  Vec2 to_world(const Vec2& local) const;

  // Counter-clockwise starting at (+u, +v).
  std::array<Vec2, 4> corners() const;

  // Same box grown by `margin` on every side.
  OrientedBox inflated(double margin) const;

 private:
  Vec2 center_;
  Vec2 half_extents_;
  double heading_;
  double cos_;
  double sin_;
};

struct Ray {
  Vec2 origin;
  Vec2 direction;  // unit length
  double max_range = 0.0;

  // Throws std::invalid_argument unless ||direction|| = 1 +- 1e-9 and max_range > 0.
  void validate() const;
};

Ray make_ray(Vec2 origin, double angle, double max_range);

// Smallest nonnegative hit distance over all boxes, clipped to max_range.
// A ray that starts inside a box reports 0.
double ray_cast(const Ray& ray, std::span<const OrientedBox> boxes);

// Separating-axis test; touching boundaries count as overlap.
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

// Inclusive of the boundary.
bool point_in_box(const Vec2& p, const OrientedBox& b);

}  // namespace parkrl
