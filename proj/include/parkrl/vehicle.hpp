#pragma once

#include "parkrl/geometry.hpp"

namespace parkrl {

// Kinematic bicycle parameters. Angles in radians, lengths in meters.
struct VehicleParams {
  double wheelbase = 2.5;
  double body_length = 4.0;
  double body_width = 2.0;
  double speed = 3.0;                      // m/s, constant forward
  double max_steer = deg_to_rad(30.0);
  double steer_rate = deg_to_rad(3.0);     // per decision step at |action| = 1
  double dt = 0.1;

  // Throws ConfigError when an invariant is violated.
  void validate() const;

  double min_turning_radius() const;
};

// `position` is the rear-axle midpoint.
struct VehicleState {
  Vec2 position;
  double heading = 0.0;
  double steer_angle = 0.0;

  bool operator==(const VehicleState&) const = default;
};

// Incremental steering: the action shifts the wheel angle by action * steer_rate.
// Negative actions steer clockwise. Actions outside [-1, 1] are clamped;
// non-finite actions throw InvalidActionError.
VehicleState update_steering(const VehicleState& state, double action, const VehicleParams& params);

// One forward-Euler step of the bicycle model at the decision timestep.
VehicleState integrate(const VehicleState& state, const VehicleParams& params);

// Midpoint of the body: rear axle + wheelbase/2 along the heading.
Vec2 body_center(const VehicleState& state, const VehicleParams& params);

OrientedBox body_box(const VehicleState& state, const VehicleParams& params);

}  // namespace parkrl
