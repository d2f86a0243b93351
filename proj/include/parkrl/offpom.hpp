#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "parkrl/neuralnet.hpp"

namespace parkrl::offpom {

struct OffPomConfig {
  double gamma = 0.99;
  double tau = 0.005;
  int batch_size = 512;
  int buffer_capacity = 100000;
  int warmup_steps = 5000;
  double target_entropy = -1.0;
  int num_q = 2;
  double initial_alpha = 1.0;
  int hidden = 128;
  int layers = 2;
  nn::OptimizerConfig policy_optimizer;
  nn::OptimizerConfig q_optimizer;
  nn::OptimizerConfig alpha_optimizer;

  void validate() const;
};

nlohmann::json to_json(const OffPomConfig& cfg);
OffPomConfig off_config_from_json(const nlohmann::json& j);

struct Transition {
  std::vector<double> obs;
  double action = 0.0;
  double reward = 0.0;
  std::vector<double> next_obs;
  bool terminal = false;  // Goal or Collision; truncations bootstrap
};

// Fixed-capacity ring of transitions with flat storage.
class ReplayBuffer {
 public:
  ReplayBuffer() = default;
  ReplayBuffer(std::size_t capacity, int obs_dim);

  // Overwrites the oldest entry once full. Throws std::invalid_argument for
  // non-finite fields or a wrong observation size.
  void push(const Transition& t);

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  int obs_dim() const { return obs_dim_; }
  // Total pushes so far.
  std::uint64_t pushes() const { return pushes_; }

  // i-th oldest stored transition, 0 <= i < size().
  Transition at(std::size_t i) const;

  // Uniform draw with replacement over the filled region.
  std::vector<std::size_t> sample_indices(std::size_t n, std::mt19937_64& rng) const;

  struct Batch {
    nn::Matrix obs;       // obs_dim x n
    nn::Vector action;
    nn::Vector reward;
    nn::Matrix next_obs;
    nn::Vector terminal;  // 1.0 or 0.0
  };
  // `slots` are storage slots as returned by sample_indices.
  Batch gather(std::span<const std::size_t> slots) const;

  void save(const std::filesystem::path& path) const;
  static ReplayBuffer load(const std::filesystem::path& path);

  bool operator==(const ReplayBuffer&) const = default;

 private:
  std::size_t capacity_ = 0;
  int obs_dim_ = 0;
  std::size_t size_ = 0;
  std::size_t cursor_ = 0;
  std::uint64_t pushes_ = 0;
  std::vector<double> obs_;
  std::vector<double> next_obs_;
  std::vector<double> action_;
  std::vector<double> reward_;
  std::vector<std::uint8_t> terminal_;
};

inline constexpr double kSquashEps = 1e-6;

struct SquashedSample {
  double action = 0.0;
  double log_prob = 0.0;
};

// u = mu + sigma * noise, action = tanh(u),
// log_prob = N(u; mu, sigma) - ln(1 - action^2 + 1e-6).
SquashedSample squashed_sample(double mu, double log_sigma, double noise);
SquashedSample squashed_sample(const nn::GaussianPolicy& policy, std::span<const double> obs, double noise);

// min over the Q estimates minus alpha * log_prob.
double soft_value(std::span<const double> q_values, double log_prob, double alpha);

// Q network input: observation rows followed by the action row.
nn::Matrix q_input(const nn::Matrix& obs, const nn::Vector& action);

struct QLossResult {
  double loss = 0.0;
  nn::Vector targets;
  std::vector<std::vector<double>> grads;  // one per Q network
};

// y = r + gamma * (1 - terminal) * soft_value(target Q(s', a'), log pi(a'|s'), alpha)
// with a' drawn from `next_noise`; loss is the mean over batch and heads of
// (Q(s, a) - y)^2. Throws NumericalError on a non-finite target.
QLossResult q_loss(const ReplayBuffer::Batch& batch, std::span<const nn::Mlp> q_nets,
                   std::span<const nn::Mlp> target_q_nets, const nn::GaussianPolicy& policy, double alpha,
                   double gamma, const nn::Vector& next_noise);

struct PolicyLossResult {
  double loss = 0.0;
  nn::Vector log_probs;  // of the reparameterised samples
  std::vector<double> grad;
};

// mean(alpha * log pi(a_s|s) - min_j Q_j(s, a_s)) with a_s = tanh(mu + sigma * noise).
PolicyLossResult policy_loss(const nn::Matrix& obs, std::span<const nn::Mlp> q_nets,
                             const nn::GaussianPolicy& policy, double alpha, const nn::Vector& noise);

// Trainable log alpha with its own optimizer.
struct Temperature {
  double log_alpha = 0.0;
  nn::Optimizer optimizer;

  double alpha() const;
};

// loss = -log_alpha * mean(log_prob + target_entropy); one optimizer step.
// Returns the loss before the step.
double temperature_update(std::span<const double> log_probs, Temperature& temp, double target_entropy);

void soft_target_update(nn::Mlp& target, const nn::Mlp& online, double tau);

struct UpdateStats {
  double q_loss = 0.0;
  double policy_loss = 0.0;
  double alpha = 0.0;
  double entropy = 0.0;  // -mean log_prob of the policy batch
};

class OffPomLearner {
 public:
  OffPomLearner() = default;
  OffPomLearner(const OffPomConfig& cfg, int obs_dim, std::uint64_t init_seed);

  // One gradient step each for the Q networks, the policy and the
  // temperature, then a soft target update. Draws from `rng`.
  UpdateStats update(const ReplayBuffer& buffer, std::mt19937_64& rng);

  const OffPomConfig& config() const { return cfg_; }
  const nn::GaussianPolicy& policy() const { return policy_; }
  nn::GaussianPolicy& policy() { return policy_; }
  const std::vector<nn::Mlp>& q_nets() const { return q_; }
  const std::vector<nn::Mlp>& target_q_nets() const { return q_target_; }
  const Temperature& temperature() const { return temp_; }

  nlohmann::json to_json() const;
  static OffPomLearner from_json(const nlohmann::json& j, const OffPomConfig& cfg);

 private:
  OffPomConfig cfg_;
  nn::GaussianPolicy policy_;
  std::vector<nn::Mlp> q_;
  std::vector<nn::Mlp> q_target_;
  nn::Optimizer opt_policy_;
  std::vector<nn::Optimizer> opt_q_;
  Temperature temp_;
};

}  // namespace parkrl::offpom
