#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fuzzycausal {

/// Membership function shapes over a universe. Values are always in
/// [0, height] with height in (0, 1]; peak value is 1 unless scaled.
class MembershipFunction {
 public:
  enum class Kind {
    Triangular,
    Trapezoidal,
    Gaussian,
    PiecewiseLinear,
    CrispIndicator,
  };

  static MembershipFunction triangular(double left, double peak, double right,
                                       double height = 1.0);
  static MembershipFunction trapezoidal(double left, double peak_left,
                                        double peak_right, double right,
                                        double height = 1.0);
  static MembershipFunction gaussian(double mean, double sigma,
                                     double height = 1.0);
  /// Vertices must be sorted by x; evaluation is linear between them and
  /// equal to the boundary value outside.
  static MembershipFunction piecewise_linear(
      std::vector<std::pair<double, double>> vertices);
  /// Indicator of a finite subset; intended for discrete universes.
  static MembershipFunction crisp_indicator(std::vector<double> subset,
                                            double height = 1.0);

  Kind kind() const noexcept { return kind_; }
  double height() const noexcept { return height_; }
  const std::vector<double>& params() const noexcept { return params_; }
  const std::vector<std::pair<double, double>>& vertices() const noexcept {
    return vertices_;
  }

  double evaluate(double t) const;

  /// Same shape scaled so its peak is height * c (c in (0,1]).
  MembershipFunction scaled(double c) const;

  /// Shape reflected across the midpoint of [a, b]: mu'(t) = mu(a + b - t).
  MembershipFunction mirrored(double a, double b) const;

 private:
  MembershipFunction(Kind kind, std::vector<double> params, double height);

  Kind kind_;
  double height_;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> vertices_;  // PiecewiseLinear only
};

}  // namespace fuzzycausal
