#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "parkrl/layout.hpp"
#include "parkrl/rewards.hpp"
#include "parkrl/vehicle.hpp"

namespace parkrl {

inline constexpr int kObsDim = 17;
using ObsVector = std::array<double, kObsDim>;

// Raw state vector: agent position, target position (both with a zero
// vertical component), ray readings and the distance to the target.
struct Observation {
  std::array<double, 3> agent_pos{};
  std::array<double, 3> target_pos{};
  std::array<double, kNumRays> rays{};
  double goal_distance = 0.0;

  ObsVector flat() const;
};

// Network input: positions over the lot half extents, rays over max_range,
// distance over the lot diagonal.
ObsVector normalize(const Observation& obs, const WorldLayout& layout);

enum class Terminal { Running, Goal, Collision, Truncated };

std::string_view to_string(Terminal t);

struct StepInfo {
  double min_ray = 0.0;
  bool milestone_latched = false;
  bool body_overlap = false;
};

struct StepOutcome {
  Observation observation;
  double reward = 0.0;
  Terminal terminal = Terminal::Running;
  StepInfo info;
};

// Rays are cast from the body midpoint against obstacles and walls.
std::array<double, kNumRays> sense(const VehicleState& state, const WorldLayout& layout,
                                   const SensorConfig& cfg);

Observation observe(const VehicleState& state, const WorldLayout& layout);

// Spawn pose with uniform jitter drawn from `rng` (three draws: x, z, heading).
VehicleState spawn_state(const WorldLayout& layout, std::mt19937_64& rng);

// Fresh episode from a seed: returns the initial observation and vehicle state.
std::pair<Observation, VehicleState> reset(const WorldLayout& layout, std::uint64_t seed);

// One parking episode. Holds the vehicle state, milestone latch and step count
// over a shared immutable layout. Not thread-safe; distinct instances are
// independent.
class ParkingEnv {
 public:
  struct Snapshot {
    VehicleState state;
    bool latched = false;
    int steps = 0;
    bool done = true;
  };

  ParkingEnv(std::shared_ptr<const WorldLayout> layout, RewardStrategy strategy);

  Observation reset(std::uint64_t seed);
  Observation reset(std::mt19937_64& rng);

  // Steering update, kinematic step, sensing, then terminal checks in the
  // order Goal > Collision > Truncated > Running. Throws UsageError once the
  // episode is over.
  StepOutcome step(double action);

  const WorldLayout& layout() const { return *layout_; }
  const std::shared_ptr<const WorldLayout>& layout_ptr() const { return layout_; }
  RewardStrategy strategy() const { return strategy_; }
  const VehicleState& state() const { return snap_.state; }
  bool latched() const { return snap_.latched; }
  int steps() const { return snap_.steps; }
  bool done() const { return snap_.done; }
  Observation observation() const { return observe(snap_.state, *layout_); }

  Snapshot snapshot() const { return snap_; }
  void restore(const Snapshot& snap) { snap_ = snap; }

 private:
  std::shared_ptr<const WorldLayout> layout_;
  RewardStrategy strategy_;
  Snapshot snap_;
};

// One row of an exported episode trace.
struct TraceRow {
  int episode = 0;
  int step = 0;
  double x = 0.0;
  double z = 0.0;
  double heading_deg = 0.0;
  double steer_deg = 0.0;
  double action = 0.0;
  double reward = 0.0;
  Terminal terminal = Terminal::Running;
};

void write_trace_header(std::ostream& out);
void write_trace_row(std::ostream& out, const TraceRow& row);

}  // namespace parkrl
