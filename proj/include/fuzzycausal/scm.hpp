#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzycausal/curve.hpp"
#include "fuzzycausal/dataset.hpp"
#include "fuzzycausal/distribution.hpp"
#include "fuzzycausal/expression.hpp"
#include "fuzzycausal/random.hpp"

namespace fuzzycausal {

struct NoiseSpec {
  enum class Kind { None, Normal };
  Kind kind = Kind::None;
  double mean = 0.0;
  double stddev = 0.0;

  static NoiseSpec none() { return {}; }
  static NoiseSpec normal(double mean, double stddev) {
    return {Kind::Normal, mean, stddev};
  }
};

struct ScmVariable {
  std::string name;
  NoiseSpec noise;
  std::string expr_text;  // empty means pure noise
};

/// Ordered structural assignments value = expr(earlier variables) + noise.
/// Acyclic by construction: expressions may only reference earlier
/// variables. A treatment and an outcome are designated, treatment first.
class ScmSpec {
 public:
  ScmSpec(std::vector<ScmVariable> variables, std::string treatment,
          std::string outcome);

  const std::vector<ScmVariable>& variables() const noexcept {
    return variables_;
  }
  const std::string& treatment() const noexcept { return treatment_; }
  const std::string& outcome() const noexcept { return outcome_; }
  std::size_t treatment_index() const noexcept { return treatment_index_; }
  std::size_t outcome_index() const noexcept { return outcome_index_; }

  std::vector<std::string> variable_names() const;

  /// One ancestral sample; do_value, when set, replaces the treatment's
  /// structural assignment by that constant.
  std::vector<double> sample_row(RandomSource& rng,
                                 std::optional<double> do_value) const;

 private:
  std::vector<ScmVariable> variables_;
  std::vector<Expression> exprs_;
  std::string treatment_;
  std::string outcome_;
  std::size_t treatment_index_ = 0;
  std::size_t outcome_index_ = 0;
};

Dataset generate_dataset(const ScmSpec& scm, std::size_t n, RandomSource rng);

/// E[Y | do(T=t)] on the grid via Monte Carlo. The same exogenous draws are
/// reused at every grid point (common random numbers), so curve differences
/// carry no sampling noise from the shared terms.
OutcomeCurve potential_outcome_curve(const ScmSpec& scm,
                                     const std::vector<double>& t_grid,
                                     std::size_t n_mc, RandomSource rng);

/// Normalized histogram of a column as a step density on the standard grid
/// over [min, max]; a constant column degenerates to a discrete point mass.
UnivariateDistribution empirical_density(
    const Dataset& data, const std::string& column, std::size_t bins,
    std::size_t grid_points = Universe::kDefaultGridPoints);

}  // namespace fuzzycausal
