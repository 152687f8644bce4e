#pragma once

#include <functional>
#include <vector>

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/random.hpp"
#include "fuzzycausal/universe.hpp"

namespace fuzzycausal {

/// Mass below which a density/overlap is treated as degenerate rather than
/// silently renormalized.
inline constexpr double kMassTol = 1e-12;

/// Probability distribution on a universe: a density sampled on the grid of
/// a continuous universe (trapezoid mass 1), or a pmf on a discrete one.
/// Immutable after construction; raw_mass() records the mass the input had
/// before normalization.
class UnivariateDistribution {
 public:
  /// Normalizes the given grid values (or probabilities). Throws
  /// DegenerateAttribute when the raw mass is below kMassTol.
  static UnivariateDistribution from_values(Universe universe,
                                            std::vector<double> values);

  static UnivariateDistribution uniform(const Universe& universe);

  /// Point mass at the given member of a discrete universe.
  static UnivariateDistribution point_mass(const Universe& universe,
                                           double at);

  /// Normal(mean, sd) truncated to a continuous universe and renormalized.
  static UnivariateDistribution truncated_normal(const Universe& universe,
                                                 double mean, double stddev);

  const Universe& universe() const noexcept { return universe_; }
  bool is_continuous() const noexcept { return universe_.is_continuous(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double raw_mass() const noexcept { return raw_mass_; }

  /// Density (or probability) at grid index i.
  double value(std::size_t i) const { return values_[i]; }

  /// Integral of the density over the universe (== 1 up to rounding).
  double total_mass() const;

  double expectation(const std::function<double(double)>& g) const;
  double moment(unsigned degree) const;
  double mean() const { return moment(1); }
  double variance() const;

  /// CDF at each grid point (trapezoid cumulative for continuous, running
  /// sum for discrete).
  std::vector<double> cdf() const;

  /// Inverse-CDF sampling; linear interpolation within grid cells for
  /// continuous universes.
  std::vector<double> sample(std::size_t n, RandomSource& rng) const;

 private:
  UnivariateDistribution(Universe universe, std::vector<double> values,
                         double raw_mass);

  Universe universe_;
  std::vector<double> values_;
  double raw_mass_;
};

/// Standard model: f = mu / ||mu|| (trapezoid norm, or sum when discrete).
UnivariateDistribution standard_density(const FuzzyAttribute& attr);

/// Independent model: f proportional to f_T * f_A, where f_A is the standard
/// density of the attribute. Throws NoOverlap when the product mass is below
/// kMassTol.
UnivariateDistribution independent_density(const FuzzyAttribute& attr,
                                           const UnivariateDistribution& f_t);

enum class ThresholdSide { Above, Below };

/// Uniform distribution on the universe points at or beyond the threshold:
/// discrete uniform pmf over {t : t >= T0} (resp. <=), or the constant
/// density 1/(b-T0) on [T0, b] (resp. 1/(T0-a) on [a, T0]).
UnivariateDistribution uniform_threshold(const Universe& universe, double t0,
                                         ThresholdSide side);

/// KL divergence integral P log(P/Q) with the 0 log 0 = 0 convention.
/// Throws SupportViolation when Q vanishes where P does not.
double kl_divergence(const UnivariateDistribution& p,
                     const UnivariateDistribution& q);

}  // namespace fuzzycausal
