#include "fuzzycausal/scm.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

ScmSpec::ScmSpec(std::vector<ScmVariable> variables, std::string treatment,
                 std::string outcome)
    : variables_(std::move(variables)),
      treatment_(std::move(treatment)),
      outcome_(std::move(outcome)) {
  if (variables_.empty()) {
    raise(ErrorCode::InvalidArgument, "SCM needs at least one variable");
  }
  std::vector<std::string> earlier;
  exprs_.reserve(variables_.size());
  for (const auto& v : variables_) {
    for (const auto& name : earlier) {
      if (name == v.name) {
        raise(ErrorCode::ExpressionError,
              "duplicate variable name '" + v.name + "'");
      }
    }
    exprs_.push_back(Expression::parse(v.expr_text, earlier));
    if (v.noise.kind == NoiseSpec::Kind::Normal && !(v.noise.stddev >= 0.0)) {
      raise(ErrorCode::InvalidArgument,
            "noise stddev must be nonnegative for '" + v.name + "'");
    }
    earlier.push_back(v.name);
  }

  auto find = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i].name == name) return i;
    }
    raise(ErrorCode::UnknownVariable,
          "SCM does not declare variable '" + name + "'");
  };
  treatment_index_ = find(treatment_);
  outcome_index_ = find(outcome_);
  if (treatment_index_ >= outcome_index_) {
    raise(ErrorCode::InvalidArgument,
          "treatment must be declared before the outcome");
  }
}

std::vector<std::string> ScmSpec::variable_names() const {
  std::vector<std::string> names;
  names.reserve(variables_.size());
  for (const auto& v : variables_) names.push_back(v.name);
  return names;
}

std::vector<double> ScmSpec::sample_row(RandomSource& rng,
                                        std::optional<double> do_value) const {
  std::vector<double> row(variables_.size(), 0.0);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    // Exogenous noise is always drawn so the stream position is identical
    // with and without an intervention.
    double noise = 0.0;
    if (variables_[i].noise.kind == NoiseSpec::Kind::Normal) {
      noise = rng.normal(variables_[i].noise.mean, variables_[i].noise.stddev);
    }
    if (do_value.has_value() && i == treatment_index_) {
      row[i] = *do_value;
      continue;
    }
    row[i] = exprs_[i].evaluate(std::span<const double>(row.data(), i)) + noise;
  }
  return row;
}

Dataset generate_dataset(const ScmSpec& scm, std::size_t n, RandomSource rng) {
  if (n < 1) {
    raise(ErrorCode::InvalidArgument, "dataset size must be at least 1");
  }
  std::vector<std::vector<double>> columns(scm.variables().size());
  for (auto& c : columns) c.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = scm.sample_row(rng, std::nullopt);
    for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  }
  return Dataset(scm.variable_names(), std::move(columns));
}

OutcomeCurve potential_outcome_curve(const ScmSpec& scm,
                                     const std::vector<double>& t_grid,
                                     std::size_t n_mc, RandomSource rng) {
  if (n_mc < 1) {
    raise(ErrorCode::InvalidArgument, "n_mc must be at least 1");
  }
  const std::size_t out_idx = scm.outcome_index();
  std::vector<double> means(t_grid.size(), 0.0);
  std::vector<double> ses(t_grid.size(), 0.0);
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    RandomSource local = rng.substream(0);  // common draws across the grid
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t r = 0; r < n_mc; ++r) {
      const auto row = scm.sample_row(local, t_grid[k]);
      const double y = row[out_idx];
      sum += y;
      sumsq += y * y;
    }
    const double m = sum / static_cast<double>(n_mc);
    means[k] = m;
    if (n_mc > 1) {
      const double var =
          std::max(0.0, (sumsq - static_cast<double>(n_mc) * m * m) /
                            static_cast<double>(n_mc - 1));
      ses[k] = std::sqrt(var / static_cast<double>(n_mc));
    }
  }
  return OutcomeCurve(t_grid, std::move(means), std::move(ses),
                      CurveProvenance::OracleMonteCarlo);
}

UnivariateDistribution empirical_density(const Dataset& data,
                                         const std::string& column,
                                         std::size_t bins,
                                         std::size_t grid_points) {
  if (bins < 2) {
    raise(ErrorCode::InvalidArgument, "empirical_density needs bins >= 2");
  }
  const auto& col = data.column(column);
  const auto [mn_it, mx_it] = std::minmax_element(col.begin(), col.end());
  const double lo = *mn_it;
  const double hi = *mx_it;
  if (!(lo < hi)) {
    // Constant column: a one-point distribution is the honest answer.
    return UnivariateDistribution::point_mass(Universe::discrete({lo}), lo);
  }

  std::vector<double> counts(bins, 0.0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double v : col) {
    auto idx = static_cast<std::size_t>((v - lo) / width);
    if (idx >= bins) idx = bins - 1;
    counts[idx] += 1.0;
  }

  const Universe u = Universe::continuous(lo, hi, grid_points);
  std::vector<double> density(u.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto idx = static_cast<std::size_t>((u.point(i) - lo) / width);
    if (idx >= bins) idx = bins - 1;
    density[i] = counts[idx];
  }
  return UnivariateDistribution::from_values(u, std::move(density));
}

}  // namespace fuzzycausal
