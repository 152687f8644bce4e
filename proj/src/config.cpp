#include "fuzzycausal/config.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

namespace {

template <typename T>
void take(std::optional<T>& slot, const nlohmann::json& file,
          const char* key) {
  if (!slot.has_value() && file.contains(key)) {
    slot = file.at(key).get<T>();
  }
}

void take_list(std::vector<std::string>& slot, const nlohmann::json& file,
               const char* key) {
  if (slot.empty() && file.contains(key)) {
    slot = file.at(key).get<std::vector<std::string>>();
  }
}

}  // namespace

void RunConfig::merge_file(const nlohmann::json& file) {
  static const std::set<std::string> known{
      "builtin",    "scm",        "data",      "pair",       "estimators",
      "defuzz",     "n",          "n_mc",      "grid",       "seed",
      "support",    "confidence", "out",       "treatment",  "outcome",
      "covariates", "partitions", "predict_rows", "probabilistic"};
  for (const auto& [key, _] : file.items()) {
    if (!known.contains(key)) {
      raise(ErrorCode::InvalidArgument,
            "unknown config key '" + key + "'");
    }
  }
  take(builtin, file, "builtin");
  take(scm_path, file, "scm");
  take(data_path, file, "data");
  take(pair, file, "pair");
  take_list(estimators, file, "estimators");
  take_list(defuzzifiers, file, "defuzz");
  take(n, file, "n");
  take(n_mc, file, "n_mc");
  take(grid, file, "grid");
  take(seed, file, "seed");
  take(support, file, "support");
  take(confidence, file, "confidence");
  take(out_path, file, "out");
  take(treatment, file, "treatment");
  take(outcome, file, "outcome");
  take_list(covariates, file, "covariates");
  take(partitions, file, "partitions");
  take(predict_rows, file, "predict_rows");
  take(probabilistic, file, "probabilistic");
}

void RunConfig::apply_env(const char* env_seed_value) {
  if (seed.has_value() || env_seed_value == nullptr) return;
  const std::string text(env_seed_value);
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    raise(ErrorCode::InvalidArgument,
          "FUZZY_CAUSAL_SEED must be an unsigned integer, got '" + text +
              "'");
  }
  seed = v;
}

void RunConfig::validate() const {
  if (n.has_value() && *n == 0) {
    raise(ErrorCode::InvalidArgument, "--n must be positive");
  }
  if (n_mc.has_value() && *n_mc == 0) {
    raise(ErrorCode::InvalidArgument, "--n-mc must be positive");
  }
  if (grid.has_value() && *grid < 2) {
    raise(ErrorCode::InvalidArgument, "--grid must be at least 2");
  }
  if (partitions.has_value() && *partitions < 2) {
    raise(ErrorCode::InvalidArgument, "--partitions must be at least 2");
  }
  if (support.has_value() && (!(*support > 0.0) || *support > 1.0)) {
    raise(ErrorCode::InvalidArgument, "--support must lie in (0, 1]");
  }
  if (confidence.has_value() && (!(*confidence > 0.0) || *confidence > 1.0)) {
    raise(ErrorCode::InvalidArgument, "--confidence must lie in (0, 1]");
  }
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace fuzzycausal
