#pragma once

#include <string>
#include <vector>

#include "fuzzycausal/membership.hpp"
#include "fuzzycausal/universe.hpp"

namespace fuzzycausal {

/// Tolerance for the fuzzy-attribute condition: the membership must come
/// within zero_tol of 0 somewhere on the universe grid.
inline constexpr double kZeroTol = 1e-9;

/// A named fuzzy subset of a universe.
///
/// Construction validates 0 <= mu <= 1 on the whole grid and, for all shapes
/// except Gaussian, that the membership attains <= kZeroTol somewhere.
/// Gaussians are exempt: they only reach their infimum at the universe edge,
/// and partitions of practical width would otherwise be unconstructible.
/// is_strictly_fuzzy() reports whether the condition actually holds.
class FuzzyAttribute {
 public:
  FuzzyAttribute(std::string label, Universe universe, MembershipFunction mu);

  const std::string& label() const noexcept { return label_; }
  const Universe& universe() const noexcept { return universe_; }
  const MembershipFunction& mu() const noexcept { return mu_; }

  /// Membership degree at t; throws OutOfUniverse outside the universe.
  double evaluate(double t) const;

  /// Membership values at every universe grid point.
  std::vector<double> grid_values() const;

  /// Minimum membership over the grid (the fuzzy-attribute condition asks
  /// this to be <= kZeroTol).
  double grid_min() const noexcept { return grid_min_; }
  bool is_strictly_fuzzy(double tol = kZeroTol) const {
    return grid_min_ <= tol;
  }

  FuzzyAttribute scaled(double c, const std::string& new_label = "") const;

 private:
  std::string label_;
  Universe universe_;
  MembershipFunction mu_;
  double grid_min_ = 0.0;
};

/// Ordered (from, to) attribute pair on one shared universe, e.g. (low, high).
struct AttributePair {
  FuzzyAttribute a;
  FuzzyAttribute b;

  AttributePair(FuzzyAttribute from, FuzzyAttribute to);
};

double eval_membership(const FuzzyAttribute& attr, double t);

/// Reflection across the midpoint of [a, b]: mu'(t) = mu(a + b - t).
FuzzyAttribute mirror_attribute(const FuzzyAttribute& attr);

enum class PartitionFamily { Triangular, Gaussian };

/// n attributes with evenly spaced peaks a + k (b-a)/(n-1).
///
/// Triangular terms reach zero at the neighboring peaks, except for n = 2
/// where the two terms meet at the interval midpoint (the canonical
/// low/high pair). Gaussian terms use sigma = (b-a)/(2(n-1)) unless
/// sigma_override > 0 is given.
std::vector<FuzzyAttribute> make_partition(const Universe& universe,
                                           std::size_t n,
                                           PartitionFamily family,
                                           const std::string& label_prefix,
                                           double sigma_override = 0.0);
std::vector<FuzzyAttribute> make_partition(const Universe& universe,
                                           std::size_t n,
                                           PartitionFamily family,
                                           std::vector<std::string> labels,
                                           double sigma_override = 0.0);

}  // namespace fuzzycausal
