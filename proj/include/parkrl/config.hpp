#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parkrl/offpom.hpp"
#include "parkrl/onpom.hpp"
#include "parkrl/rewards.hpp"

namespace parkrl {

enum class Algorithm { OnPom, OffPom };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm a);

inline constexpr int kConfigSchemaVersion = 1;

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::OnPom;
  RewardStrategy reward = RewardStrategy::Mar;
  long long total_steps = 2000000;
  int n_envs = 12;
  std::uint64_t master_seed = 0;
  std::filesystem::path layout_path;  // absolute once resolved
  std::filesystem::path output_dir;   // absolute once resolved
  long long metrics_every = 2000;
  long long checkpoint_every = 100000;
  int eval_episodes = 100;
  onpom::OnPomConfig onpom;
  offpom::OffPomConfig offpom;

  // Throws ConfigError; also checks that the layout file exists.
  void validate() const;

  // <output_dir>/<algorithm>-<reward>-<seed>
  std::filesystem::path run_dir() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);

// Relative paths in the document resolve against `base_dir`. Unknown keys
// are rejected so that a mistyped override fails loudly.
ExperimentConfig experiment_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);

// "a.b.c=value": the value is parsed as JSON when possible, else taken as a
// string. Throws UsageError for a malformed assignment.
void apply_override(nlohmann::json& doc, const std::string& assignment);

nlohmann::json read_json_file(const std::filesystem::path& path);

// A config file is either a single experiment or a batch:
//   {"schema_version": 1, "base": "<file>" | {...}, "seeds": [..], "cells": [{...}, ..]}
// where each cell is merged over the base and expanded for every seed.
bool is_batch(const nlohmann::json& doc);

// Expands a config file into concrete experiments. Overrides apply to every
// expanded experiment after cell merging; `seed`, when set, replaces the
// master seed (and a batch's seed list).
std::vector<ExperimentConfig> load_experiments(const std::filesystem::path& path,
                                               const std::vector<std::string>& overrides,
                                               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace parkrl
