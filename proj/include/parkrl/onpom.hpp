#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "parkrl/neuralnet.hpp"

namespace parkrl::onpom {

struct OnPomConfig {
  double clip_epsilon = 0.3;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double value_coef = 0.5;
  double entropy_coef = 0.01;
  int epochs_per_batch = 4;
  int minibatch_size = 512;
  int rollout_horizon = 4096;  // summed over all environment instances
  int hidden = 128;
  int layers = 2;
  nn::OptimizerConfig optimizer;

  void validate() const;
};

nlohmann::json to_json(const OnPomConfig& cfg);
// Missing keys keep their defaults.
OnPomConfig on_config_from_json(const nlohmann::json& j);

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> returns;
};

// One instance's steps in time order. dones[t] marks the last step of an
// episode; bootstrap[t] is the value of the state after step t where the
// trajectory stops there: 0 after Goal/Collision, V(s') after a truncation,
// and V(s') for the final entry when the rollout cuts an episode mid-way.
// Throws std::invalid_argument on a length mismatch.
GaeResult compute_gae(std::span<const double> rewards, std::span<const double> values,
                      std::span<const std::uint8_t> dones, std::span<const double> bootstrap, double gamma,
                      double lambda);

// min(r * A, clip(r, 1 - eps, 1 + eps) * A)
double clipped_surrogate(double ratio, double advantage, double eps);

// mean((v - R)^2)
double value_loss(std::span<const double> values, std::span<const double> returns);

// Per-minibatch normalisation to mean 0, population std 1 (guarded by 1e-8).
std::vector<double> normalize_advantages(std::span<const double> adv);

// Samples are columns of `obs`.
struct Minibatch {
  nn::Matrix obs;
  std::vector<double> actions;  // unclamped Gaussian samples
  std::vector<double> log_prob_old;
  std::vector<double> advantages;  // raw; normalised inside composite_loss
  std::vector<double> returns;
};

struct LossResult {
  double loss = 0.0;
  double policy_loss = 0.0;  // -L_CLIP
  double value_loss = 0.0;
  double entropy = 0.0;      // mean over the minibatch
  double mean_ratio = 0.0;
  std::vector<double> grad_policy;
  std::vector<double> grad_critic;
};

// loss = -L_CLIP + c1 * L_VF - c2 * mean entropy with analytic gradients.
// Throws NumericalError when the loss is not finite.
LossResult composite_loss(const Minibatch& mb, const nn::GaussianPolicy& policy, const nn::Mlp& critic,
                          const OnPomConfig& cfg);

// Full rollout in canonical (instance, step) order.
struct RolloutBatch {
  nn::Matrix obs;  // kObsDim x N, normalised
  std::vector<double> actions;
  std::vector<double> log_prob_old;
  std::vector<double> rewards;
  std::vector<double> values;
  std::vector<std::uint8_t> dones;
  std::vector<double> bootstrap;
  std::vector<int> instance;
  std::vector<double> advantages;
  std::vector<double> returns;

  std::size_t size() const { return actions.size(); }
  // Fills advantages/returns, running GAE separately over each instance's
  // contiguous block.
  void finish(double gamma, double lambda);
};

struct UpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double mean_ratio_first_epoch = 0.0;
};

// Actor, critic and their optimizers.
class OnPomLearner {
 public:
  OnPomLearner() = default;
  OnPomLearner(const OnPomConfig& cfg, int obs_dim, std::uint64_t init_seed);

  // epochs_per_batch shuffled passes of minibatch_size updates over `batch`.
  // Shuffling draws from `rng`.
  UpdateStats update(const RolloutBatch& batch, std::mt19937_64& rng);

  const OnPomConfig& config() const { return cfg_; }
  nn::GaussianPolicy& policy() { return policy_; }
  const nn::GaussianPolicy& policy() const { return policy_; }
  nn::Mlp& critic() { return critic_; }
  const nn::Mlp& critic() const { return critic_; }

  nlohmann::json to_json() const;
  static OnPomLearner from_json(const nlohmann::json& j, const OnPomConfig& cfg);

 private:
  OnPomConfig cfg_;
  nn::GaussianPolicy policy_;
  nn::Mlp critic_;
  nn::Optimizer opt_policy_;
  nn::Optimizer opt_critic_;
};

}  // namespace parkrl::onpom
