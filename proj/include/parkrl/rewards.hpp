#pragma once

#include <array>
#include <string>
#include <string_view>

#include "parkrl/geometry.hpp"

namespace parkrl {

// Reward constants. Magnitudes are stored positive; the goal bonus is paid
// with a positive sign, collision and living penalties with a negative one.
struct RewardParams {
  double goal_bonus = 100.0;
  double collision_penalty = 100.0;
  double living_penalty = 0.1;
  double dpr_offset = 0.5;     // added constant of the proximity reward
  double dpr_scale = 0.025;    // per-meter slope of the proximity reward
  double mar_offset = 20.0;    // shaping offset after the milestone, meters
  double collision_threshold = 0.3;

  // Sign/positivity checks only; the layout-dependent bound on mar_offset is
  // enforced by WorldLayout::validate.
  void validate() const;
};

struct RewardContext {
  Vec2 agent_pos;
  Vec2 target_pos;
  double min_ray = 0.0;  // closest obstacle reading; 0 when the body overlaps an obstacle
  bool in_goal = false;
  bool milestone_latched = false;
};

enum class RewardStrategy { Gor, Dpr, Mar };

RewardStrategy parse_reward_strategy(std::string_view name);
std::string_view to_string(RewardStrategy strategy);

double euclidean(const std::array<double, 3>& a, const std::array<double, 3>& b);
inline double euclidean(const Vec2& a, const Vec2& b) { return distance(a, b); }

// Goal-only: bonus on arrival, penalty on collision, living penalty otherwise.
double reward_gor(const RewardContext& ctx, const RewardParams& p);

// Proximity reward: offset - scale * D(agent, target) on non-terminal steps.
double reward_dpr(const RewardContext& ctx, const RewardParams& p);

// Milestone-augmented: living penalty until the milestone is latched, then
// mar_offset - D(agent, target).
double reward_mar(const RewardContext& ctx, const RewardParams& p);

double compute_reward(RewardStrategy strategy, const RewardContext& ctx, const RewardParams& p);

// 1 iff D(agent, milestone) <= radius.
int milestone_indicator(const Vec2& agent, const Vec2& milestone, double radius);

}  // namespace parkrl
