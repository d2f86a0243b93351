#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "parkrl/environment.hpp"
#include "parkrl/neuralnet.hpp"

namespace parkrl {

// How a Gaussian sample becomes an environment action.
enum class ActionSquash { Clamp, Tanh };

ActionSquash parse_action_squash(std::string_view name);
std::string_view to_string(ActionSquash s);

struct PolicyAgent {
  nn::GaussianPolicy policy;
  ActionSquash squash = ActionSquash::Clamp;

  // Mean action: clamp(mu) or tanh(mu).
  double deterministic_action(const ObsVector& normalized) const;
  // One Gaussian draw from `rng`, squashed the same way.
  double sample_action(const ObsVector& normalized, std::mt19937_64& rng) const;
};

// Reads the policy network and squashing mode from a checkpoint file.
// Throws ParseError on malformed files and ConfigError when the network
// input width is not kObsDim.
PolicyAgent load_agent(const std::filesystem::path& checkpoint);
PolicyAgent agent_from_checkpoint(const nlohmann::json& ckpt);

// Chooses the next action given the live environment and its latest raw
// observation. `rng` is the per-episode stream.
using ActionFn = std::function<double(const ParkingEnv& env, const Observation& obs, std::mt19937_64& rng)>;

ActionFn agent_policy(std::shared_ptr<const PolicyAgent> agent, bool deterministic);

struct EpisodeRecord {
  int episode = 0;
  std::uint64_t seed = 0;
  Terminal terminal = Terminal::Running;
  int steps = 0;
  double final_distance = 0.0;
  double total_reward = 0.0;
};

struct EvalReport {
  int episodes = 0;
  double success_rate = 0.0;
  double collision_rate = 0.0;
  double truncation_rate = 0.0;
  double avg_final_distance = 0.0;
  double avg_steps = 0.0;
  std::vector<EpisodeRecord> records;

  nlohmann::json to_json() const;
};

std::uint64_t eval_episode_seed(std::uint64_t seed, int episode);

// Runs n_episodes, episode e reset from eval_episode_seed(seed, e).
EvalReport evaluate(const ActionFn& policy, std::shared_ptr<const WorldLayout> layout, RewardStrategy strategy,
                    int n_episodes, std::uint64_t seed);

struct ComparisonResult {
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
  double cohens_d = 0.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;

  nlohmann::json to_json() const;
};

// Regularised incomplete beta I_x(a, b) by Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);
// Student t CDF with `dof` (possibly fractional) degrees of freedom.
double student_t_cdf(double t, double dof);

// Welch's unequal-variance t-test with Cohen's d on the averaged variances.
// Throws std::invalid_argument when a series has fewer than 2 values or
// both variances are zero.
ComparisonResult welch_t(std::span<const double> a, std::span<const double> b);

void print_comparison(std::ostream& out, const ComparisonResult& r, const std::string& label_a,
                      const std::string& label_b);

// mean_episode_reward at every row whose train_step is a multiple of
// `stride`. Throws ParseError naming the offending line.
std::vector<double> reward_series(std::istream& in, long long stride, const std::string& source = "<stream>");
std::vector<double> reward_series(const std::filesystem::path& metrics_csv, long long stride);

// One trace block per episode in the environment trace CSV schema.
void export_trajectories(const ActionFn& policy, std::shared_ptr<const WorldLayout> layout,
                         RewardStrategy strategy, int n_episodes, std::uint64_t seed, std::ostream& out);

}  // namespace parkrl
