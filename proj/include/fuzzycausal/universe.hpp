#pragma once

#include <cstddef>
#include <vector>

namespace fuzzycausal {

/// Value set of a variable: a continuous interval [a, b] carrying a uniform
/// evaluation grid, or a finite strictly-sorted set of reals.
///
/// All quadrature in the library is composite trapezoid on the grid of a
/// continuous universe, so two objects only interoperate when their
/// universes compare equal (same interval and grid resolution, or the same
/// discrete points).
class Universe {
 public:
  static constexpr std::size_t kDefaultGridPoints = 2001;

  static Universe continuous(double a, double b,
                             std::size_t grid_points = kDefaultGridPoints);
  static Universe discrete(std::vector<double> values);

  bool is_continuous() const noexcept { return continuous_; }
  bool is_discrete() const noexcept { return !continuous_; }

  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }
  std::size_t size() const noexcept { return grid_.size(); }
  double step() const noexcept { return step_; }

  /// Grid points (continuous) or the member values (discrete).
  const std::vector<double>& points() const noexcept { return grid_; }
  double point(std::size_t i) const { return grid_[i]; }

  bool contains(double t, double tol = 1e-9) const;

  /// Index of the discrete member equal to t (within tol); throws
  /// OutOfUniverse when absent. Continuous universes have no member index.
  std::size_t index_of(double t, double tol = 1e-9) const;

  /// Trapezoid weights for continuous universes, unit weights for discrete,
  /// so that dot(weights, f) realizes the integral (resp. the sum).
  std::vector<double> quadrature_weights() const;

  bool operator==(const Universe& other) const;
  bool operator!=(const Universe& other) const { return !(*this == other); }

 private:
  Universe() = default;

  bool continuous_ = true;
  double a_ = 0.0;
  double b_ = 1.0;
  double step_ = 0.0;
  std::vector<double> grid_;
};

}  // namespace fuzzycausal
