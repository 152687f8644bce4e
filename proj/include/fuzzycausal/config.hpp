#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuzzycausal {

/// Run parameters shared by the CLI commands. Precedence: explicit flags,
/// then config-file values, then FUZZY_CAUSAL_SEED (seed only), then the
/// built-in defaults.
struct RunConfig {
  std::optional<std::string> builtin;
  std::optional<std::string> scm_path;
  std::optional<std::string> data_path;
  std::optional<std::string> pair;  // fig1a..fig1d or a JSON path
  std::vector<std::string> estimators;
  std::vector<std::string> defuzzifiers;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> n_mc;
  std::optional<std::uint64_t> grid;
  std::optional<std::uint64_t> seed;
  std::optional<double> support;
  std::optional<double> confidence;
  std::optional<std::string> out_path;
  std::optional<std::string> treatment;
  std::optional<std::string> outcome;
  std::vector<std::string> covariates;
  std::optional<std::uint64_t> partitions;     // fuzzy subsets per variable
  std::optional<std::uint64_t> predict_rows;   // rows scored by cmd_rules
  std::optional<bool> probabilistic;

  /// Fills unset fields from a parsed config file. Unknown keys are errors.
  void merge_file(const nlohmann::json& file);

  /// Applies the environment default for the seed.
  void apply_env(const char* env_seed_value);

  std::uint64_t seed_or_default() const { return seed.value_or(0); }
  std::uint64_t n_or(std::uint64_t fallback) const {
    return n.value_or(fallback);
  }
  std::uint64_t n_mc_or(std::uint64_t fallback) const {
    return n_mc.value_or(fallback);
  }
  std::uint64_t grid_or(std::uint64_t fallback) const {
    return grid.value_or(fallback);
  }
  double support_or(double fallback) const {
    return support.value_or(fallback);
  }
  double confidence_or(double fallback) const {
    return confidence.value_or(fallback);
  }

  /// Count/threshold sanity checks shared by every command.
  void validate() const;
};

std::vector<std::string> split_list(const std::string& csv);

}  // namespace fuzzycausal
