#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "parkrl/geometry.hpp"
#include "parkrl/rewards.hpp"
#include "parkrl/vehicle.hpp"

namespace parkrl {

inline constexpr int kNumRays = 10;

struct SensorConfig {
  // Relative to the vehicle heading, radians, sorted ascending so that a
  // left/right mirror reverses the reading vector.
  std::array<double, kNumRays> ray_angles{};
  double max_range = 8.0;

  // Front rays at +-12.5 and +-37.5 deg (25 deg apart), the same pattern
  // facing backwards, and one side ray per flank 65 deg past the outermost
  // front ray.
  static SensorConfig defaults();
  void validate() const;
};

struct SpawnConfig {
  Vec2 position;  // rear axle
  double heading = 0.0;
  double jitter_position = 0.0;  // uniform +- per axis, meters
  double jitter_heading = 0.0;   // uniform +-, radians
};

// Static parking-lot geometry plus everything an episode needs to run.
struct WorldLayout {
  OrientedBox lot_bounds{{0.0, 0.0}, {20.0, 15.0}};
  double wall_thickness = 1.0;
  double inflation_margin = 0.1;
  std::vector<OrientedBox> raw_obstacles;  // as authored
  std::vector<OrientedBox> obstacles;      // raw_obstacles inflated by inflation_margin
  std::vector<OrientedBox> walls;          // slabs just outside lot_bounds
  OrientedBox goal_region{{0.0, 0.0}, {1.0, 1.0}};
  Vec2 target_point;  // goal_region center
  Vec2 milestone_center;
  double milestone_radius = 3.0;
  SpawnConfig spawn;
  SensorConfig sensor = SensorConfig::defaults();
  VehicleParams vehicle;
  RewardParams rewards;
  int max_steps = 500;

  // obstacles followed by walls
  std::vector<OrientedBox> colliders;

  // Recomputes obstacles, walls, colliders and target_point from the
  // authored fields.
  void rebuild();

  // Throws ConfigError on any violated invariant, including the requirement
  // that mar_offset covers every milestone-disk-to-target distance.
  void validate() const;

  // Lot-frame half extents and diagonal, used for observation scaling.
  Vec2 lot_half_extents() const { return lot_bounds.half_extents(); }
  double lot_diagonal() const;
};

WorldLayout layout_from_json(const nlohmann::json& doc);
nlohmann::json layout_to_json(const WorldLayout& layout);
WorldLayout load_layout(const std::filesystem::path& path);

}  // namespace parkrl
