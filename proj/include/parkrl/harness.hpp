#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "parkrl/config.hpp"
#include "parkrl/environment.hpp"
#include "parkrl/evalstats.hpp"

namespace parkrl {

// Policy output for one step.
struct Decision {
  double action_env = 0.0;  // what the environment receives
  double action_raw = 0.0;  // what the learner stores
  double log_prob = 0.0;
  double value = 0.0;
};

// Maps a normalised observation to a decision. Called concurrently from
// worker threads, so it must only read shared state; randomness comes from
// the instance stream passed in.
using DecideFn = std::function<Decision(const ObsVector& obs, std::mt19937_64& rng)>;

// One environment plus its seed stream. Episode k of instance i is reset
// from, and draws its action noise from, a generator seeded with
// derive_seed(master, {kEnvStream, i, k}).
class EnvInstance {
 public:
  EnvInstance(std::shared_ptr<const WorldLayout> layout, RewardStrategy strategy, std::uint64_t master_seed,
              int id);

  int id() const { return id_; }
  std::int64_t episode_index() const { return episode_; }
  const ParkingEnv& env() const { return env_; }
  const Observation& observation() const { return obs_; }

  struct StepRecord {
    ObsVector obs{};
    Decision decision;
    double reward = 0.0;
    Terminal terminal = Terminal::Running;
    ObsVector next_obs{};  // state after the step, before any automatic reset
    double final_distance = 0.0;
    std::int64_t episode = 0;
    int step = 0;
    double episode_return = 0.0;  // running total including this step
  };

  // Acts once; starts the next episode automatically after a terminal step.
  StepRecord step(const DecideFn& decide);

  nlohmann::json save() const;
  void load(const nlohmann::json& j);

 private:
  void begin_episode();

  std::uint64_t master_seed_;
  int id_;
  std::int64_t episode_ = 0;
  std::mt19937_64 rng_;
  ParkingEnv env_;
  Observation obs_;
  double episode_return_ = 0.0;
};

using Rollout = std::vector<std::vector<EnvInstance::StepRecord>>;  // [instance][step]

// Steps every instance `steps_per_env` times with up to `workers` threads
// (instances are partitioned, never shared). The result is indexed by
// instance id then step, independent of thread timing. A failure inside a
// worker is rethrown naming the instance.
Rollout collect_parallel(std::vector<EnvInstance>& instances, int steps_per_env, const DecideFn& decide,
                         int workers);

int default_workers(int n_envs);

struct RunArtifacts {
  std::filesystem::path dir;
  std::filesystem::path metrics;
  std::filesystem::path final_checkpoint;
  std::vector<std::filesystem::path> periodic_checkpoints;
  std::filesystem::path config_snapshot;
  std::filesystem::path report;
  double wall_clock_minutes = 0.0;
  long long train_steps = 0;
  std::optional<EvalReport> eval;
};

struct RunOptions {
  std::optional<std::filesystem::path> resume;  // checkpoint written by an earlier run
  int workers = 0;                              // 0: default_workers(n_envs)
  std::ostream* log = nullptr;
};

inline constexpr int kCheckpointSchemaVersion = 1;

// Trains the configured cell for total_steps environment steps and writes
// metrics.csv, periodic ckpt-<step>.json files, final.ckpt.json, config.json
// and report.json into cfg.run_dir(). A failed run leaves a FAILED marker.
RunArtifacts run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

// Metric CSV header for the algorithm.
std::string metrics_header(Algorithm algo);

nlohmann::json read_checkpoint(const std::filesystem::path& path);

// Layout stored in a checkpoint.
std::shared_ptr<const WorldLayout> checkpoint_layout(const nlohmann::json& ckpt);

}  // namespace parkrl
