#pragma once

#include <string>
#include <vector>

namespace fuzzycausal {

enum class CurveProvenance { OracleMonteCarlo, RegressionAdjusted, FuzzySystem };

const char* provenance_name(CurveProvenance p);

/// Estimated potential-outcome curve t -> E[Y(t)] on a strictly increasing
/// treatment grid, with a naive per-point standard error. Evaluation between
/// grid points is linear interpolation.
class OutcomeCurve {
 public:
  OutcomeCurve(std::vector<double> t_grid, std::vector<double> estimates,
               std::vector<double> std_errors, CurveProvenance provenance);

  const std::vector<double>& grid() const noexcept { return t_; }
  const std::vector<double>& estimates() const noexcept { return y_; }
  const std::vector<double>& std_errors() const noexcept { return se_; }
  CurveProvenance provenance() const noexcept { return provenance_; }

  double t_min() const noexcept { return t_.front(); }
  double t_max() const noexcept { return t_.back(); }

  /// Linear interpolation; throws GridMissingPoints outside [t_min, t_max]
  /// (beyond a small slack for boundary rounding).
  double value(double t) const;
  double se(double t) const;

  /// sup |E[Y(t)]| over the curve grid.
  double sup_abs() const;

  /// Finite differences of the curve. Central differences inside, one-sided
  /// second-order stencils at the ends (exact for quadratics).
  std::vector<double> derivative() const;

 private:
  double interpolate(const std::vector<double>& values, double t) const;

  std::vector<double> t_;
  std::vector<double> y_;
  std::vector<double> se_;
  CurveProvenance provenance_;
};

/// Evenly spaced grid of `count` points over [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace fuzzycausal
