#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace parkrl::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Activations kept by forward() for the matching backward() call.
// inputs[l] is the input of layer l (inputs[0] is the network input).
struct MlpCache {
  std::vector<Matrix> inputs;
  bool valid = false;
};

// Fully connected network with tanh hidden layers and a linear output layer.
// Samples are columns: forward() takes (input_dim x batch) and returns
// (output_dim x batch). All parameters live in one contiguous buffer so the
// optimizer and target-network updates work on flat spans.
class Mlp {
 public:
  Mlp() = default;
  // Zero-initialised.
  explicit Mlp(std::vector<int> dims);

  // Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases;
  // the output layer is multiplied by `final_scale`.
  static Mlp glorot(std::vector<int> dims, std::mt19937_64& rng, double final_scale = 1.0);

  const std::vector<int>& dims() const { return dims_; }
  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  int num_layers() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t num_params() const { return params_.size(); }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }

  Eigen::Map<Matrix> weight(int layer);
  Eigen::Map<const Matrix> weight(int layer) const;
  Eigen::Map<Vector> bias(int layer);
  Eigen::Map<const Vector> bias(int layer) const;

  // Throws std::invalid_argument on an input dimension mismatch.
  Matrix forward(const Matrix& x, MlpCache* cache = nullptr) const;

  // Reverse pass for the batch stored in `cache`. Parameter gradients are
  // *added* into `grad_params` (same layout as params()); returns the
  // gradient with respect to the network input. An empty `grad_params`
  // skips the parameter gradients. Throws UsageError when the cache is empty.
  Matrix backward(const MlpCache& cache, const Matrix& grad_out, std::span<double> grad_params) const;

  bool operator==(const Mlp&) const = default;

 private:
  std::vector<int> dims_;
  // Over-aligned so vectorised kernels split the buffer the same way in every run.
  std::vector<double, Eigen::aligned_allocator<double>> params_;
  std::vector<std::size_t> w_offset_;
  std::vector<std::size_t> b_offset_;
};

nlohmann::json mlp_to_json(const Mlp& net);
Mlp mlp_from_json(const nlohmann::json& j);

inline constexpr double kLogSigmaMin = -5.0;
inline constexpr double kLogSigmaMax = 2.0;

// Diagonal (here univariate) Gaussian policy head on top of an Mlp trunk.
// Output row 0 is the mean, row 1 the unclamped log standard deviation.
struct GaussianPolicy {
  Mlp trunk;

  static GaussianPolicy make(int obs_dim, int hidden, int layers, std::mt19937_64& rng);

  struct Heads {
    Vector mu;
    Vector log_sigma;     // clamped to [kLogSigmaMin, kLogSigmaMax]
    Eigen::ArrayXd clamp_mask;  // 1 where the clamp is inactive, else 0
  };

  Heads heads(const Matrix& obs, MlpCache* cache = nullptr) const;

  // Pushes per-sample gradients w.r.t. (mu, clamped log_sigma) back through
  // the clamp and the trunk.
  void backward(const MlpCache& cache, const Heads& heads, const Vector& grad_mu, const Vector& grad_log_sigma,
                std::span<double> grad_params) const;
};

double gaussian_log_prob(double x, double mu, double sigma);

struct PolicySample {
  double action_raw = 0.0;
  double log_prob = 0.0;
};

// action_raw = mu + sigma * noise with its Gaussian log density.
PolicySample policy_sample(const GaussianPolicy& policy, std::span<const double> obs, double noise);

// Differential entropy of N(mu, sigma^2): 0.5 * ln(2 pi e sigma^2).
double policy_entropy(double sigma);

// Scalar value / Q network helper: evaluates a single input.
double scalar_output(const Mlp& net, std::span<const double> input);

enum class OptimizerKind { Adam, Sgd };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Adam;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  bool operator==(const OptimizerConfig&) const = default;
};

OptimizerKind parse_optimizer_kind(std::string_view name);
std::string_view to_string(OptimizerKind kind);

nlohmann::json to_json(const OptimizerConfig& cfg);
// Missing keys keep the values of `base`.
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j, OptimizerConfig base = {});

// First-order optimizer over a flat parameter vector.
class Optimizer {
 public:
  Optimizer() = default;
  Optimizer(OptimizerConfig cfg, std::size_t num_params);

  // SGD: p -= lr * g. Adam: bias-corrected moment update.
  // Throws std::invalid_argument on a size mismatch.
  void step(std::span<double> params, std::span<const double> grads);

  const OptimizerConfig& config() const { return cfg_; }
  void set_learning_rate(double lr) { cfg_.learning_rate = lr; }
  std::int64_t steps() const { return t_; }

  nlohmann::json to_json() const;
  static Optimizer from_json(const nlohmann::json& j);

  bool operator==(const Optimizer&) const = default;

 private:
  OptimizerConfig cfg_;
  std::size_t size_ = 0;
  std::int64_t t_ = 0;
  std::vector<double> m_;
  std::vector<double> v_;
};

// target <- (1 - tau) * target + tau * online, elementwise.
void soft_update(std::span<double> target, std::span<const double> online, double tau);

// Copies an observation span into a single-column matrix.
Matrix column(std::span<const double> values);

}  // namespace parkrl::nn
