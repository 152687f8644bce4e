#pragma once

#include <span>
#include <string>
#include <vector>

#include "fuzzycausal/curve.hpp"
#include "fuzzycausal/dataset.hpp"

namespace fuzzycausal {

/// Least squares via Householder QR; never forms normal equations.
/// Throws RankDeficient when the triangular factor signals a condition
/// number above cond_limit.
std::vector<double> solve_least_squares(
    const std::vector<std::vector<double>>& rows,
    const std::vector<double>& rhs, double cond_limit = 1e10);

/// E[Y | t, c] as a linear model in (1, t, t^2, ..., t^degree, covariates,
/// optionally t * covariate products).
class LinearAdjustmentModel {
 public:
  const std::vector<double>& coefficients() const noexcept { return coef_; }
  double residual_variance() const noexcept { return resid_var_; }
  unsigned treatment_degree() const noexcept { return degree_; }
  bool has_interactions() const noexcept { return interactions_; }
  const std::vector<std::string>& covariates() const noexcept {
    return covariates_;
  }
  const std::string& treatment() const noexcept { return treatment_; }
  const std::string& outcome() const noexcept { return outcome_; }

  /// Coefficient on the linear treatment term.
  double treatment_coefficient() const { return coef_[1]; }

  double predict(double t, std::span<const double> covariate_values) const;

  friend LinearAdjustmentModel fit_adjustment(const Dataset&,
                                              const std::string&,
                                              const std::string&,
                                              const std::vector<std::string>&,
                                              unsigned, bool);

 private:
  std::string outcome_;
  std::string treatment_;
  std::vector<std::string> covariates_;
  unsigned degree_ = 1;
  bool interactions_ = false;
  std::vector<double> coef_;
  double resid_var_ = 0.0;
};

LinearAdjustmentModel fit_adjustment(const Dataset& data,
                                     const std::string& outcome,
                                     const std::string& treatment,
                                     const std::vector<std::string>& covariates,
                                     unsigned treatment_degree = 1,
                                     bool interactions = false);

/// Regression-adjusted outcome curve: E_C[ E[Y | t, c] ] with the outer
/// average taken over the observed covariate rows.
OutcomeCurve adjusted_outcome_curve(const LinearAdjustmentModel& model,
                                    const Dataset& data,
                                    const std::vector<double>& t_grid);

}  // namespace fuzzycausal
