#include "fuzzycausal/regression.hpp"

#include <cmath>
#include <limits>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

std::vector<double> solve_least_squares(
    const std::vector<std::vector<double>>& rows,
    const std::vector<double>& rhs, double cond_limit) {
  const std::size_t m = rows.size();
  if (m == 0 || rhs.size() != m) {
    raise(ErrorCode::InvalidArgument, "least squares: empty or ragged input");
  }
  const std::size_t p = rows.front().size();
  if (m <= p) {
    raise(ErrorCode::RankDeficient,
          "least squares needs more rows than features");
  }

  // Householder QR applied in place to [A | b].
  std::vector<std::vector<double>> a = rows;
  std::vector<double> b = rhs;
  std::vector<double> diag(p, 0.0);

  for (std::size_t j = 0; j < p; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < m; ++i) norm += a[i][j] * a[i][j];
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      raise(ErrorCode::RankDeficient,
            "design matrix column " + std::to_string(j) + " is zero");
    }
    const double alpha = a[j][j] > 0.0 ? -norm : norm;
    // Householder vector v = x - alpha e1, stored in column j below row j.
    a[j][j] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < m; ++i) vnorm2 += a[i][j] * a[i][j];
    if (vnorm2 > 0.0) {
      for (std::size_t k = j + 1; k < p; ++k) {
        double dot = 0.0;
        for (std::size_t i = j; i < m; ++i) dot += a[i][j] * a[i][k];
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t i = j; i < m; ++i) a[i][k] -= f * a[i][j];
      }
      double dot = 0.0;
      for (std::size_t i = j; i < m; ++i) dot += a[i][j] * b[i];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < m; ++i) b[i] -= f * a[i][j];
    }
    diag[j] = alpha;
  }

  double dmax = 0.0;
  double dmin = std::numeric_limits<double>::infinity();
  for (double d : diag) {
    dmax = std::max(dmax, std::abs(d));
    dmin = std::min(dmin, std::abs(d));
  }
  if (!(dmin > 0.0) || dmax / dmin > cond_limit) {
    raise(ErrorCode::RankDeficient,
          "design matrix is rank deficient or too ill-conditioned");
  }

  // Back substitution on R x = (Q^T b)[0..p).
  std::vector<double> x(p, 0.0);
  for (std::size_t jj = p; jj-- > 0;) {
    double acc = b[jj];
    for (std::size_t k = jj + 1; k < p; ++k) acc -= a[jj][k] * x[k];
    x[jj] = acc / diag[jj];
  }
  return x;
}

namespace {

std::vector<double> design_row(double t, std::span<const double> covs,
                               unsigned degree, bool interactions) {
  std::vector<double> row;
  row.reserve(1 + degree + covs.size() * (interactions ? 2 : 1));
  row.push_back(1.0);
  double tp = 1.0;
  for (unsigned d = 1; d <= degree; ++d) {
    tp *= t;
    row.push_back(tp);
  }
  for (double c : covs) row.push_back(c);
  if (interactions) {
    for (double c : covs) row.push_back(t * c);
  }
  return row;
}

}  // namespace

double LinearAdjustmentModel::predict(
    double t, std::span<const double> covariate_values) const {
  if (covariate_values.size() != covariates_.size()) {
    raise(ErrorCode::ColumnMismatch,
          "covariate vector does not match the fitted model");
  }
  const auto row = design_row(t, covariate_values, degree_, interactions_);
  double acc = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += coef_[i] * row[i];
  return acc;
}

LinearAdjustmentModel fit_adjustment(const Dataset& data,
                                     const std::string& outcome,
                                     const std::string& treatment,
                                     const std::vector<std::string>& covariates,
                                     unsigned treatment_degree,
                                     bool interactions) {
  if (treatment_degree < 1) {
    raise(ErrorCode::DegreeUnsupported, "treatment degree must be >= 1");
  }
  const auto& y = data.column(outcome);
  const auto& t = data.column(treatment);
  std::vector<const std::vector<double>*> cov_cols;
  cov_cols.reserve(covariates.size());
  for (const auto& name : covariates) cov_cols.push_back(&data.column(name));

  const std::size_t n = data.n_rows();
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  std::vector<double> covs(covariates.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < cov_cols.size(); ++c) covs[c] = (*cov_cols[c])[r];
    rows.push_back(design_row(t[r], covs, treatment_degree, interactions));
  }

  LinearAdjustmentModel model;
  model.outcome_ = outcome;
  model.treatment_ = treatment;
  model.covariates_ = covariates;
  model.degree_ = treatment_degree;
  model.interactions_ = interactions;
  model.coef_ = solve_least_squares(rows, y);

  double rss = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double pred = 0.0;
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      pred += model.coef_[k] * rows[r][k];
    }
    const double e = y[r] - pred;
    rss += e * e;
  }
  model.resid_var_ = rss / static_cast<double>(n - model.coef_.size());
  return model;
}

OutcomeCurve adjusted_outcome_curve(const LinearAdjustmentModel& model,
                                    const Dataset& data,
                                    const std::vector<double>& t_grid) {
  std::vector<const std::vector<double>*> cov_cols;
  for (const auto& name : model.covariates()) {
    cov_cols.push_back(&data.column(name));
  }
  const std::size_t n = data.n_rows();
  std::vector<double> means(t_grid.size(), 0.0);
  std::vector<double> ses(t_grid.size(), 0.0);
  std::vector<double> covs(cov_cols.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < cov_cols.size(); ++c) {
        covs[c] = (*cov_cols[c])[r];
      }
      const double v = model.predict(t_grid[k], covs);
      sum += v;
      sumsq += v * v;
    }
    const double m = sum / static_cast<double>(n);
    means[k] = m;
    if (n > 1) {
      const double var =
          std::max(0.0, (sumsq - static_cast<double>(n) * m * m) /
                            static_cast<double>(n - 1));
      ses[k] = std::sqrt(var / static_cast<double>(n));
    }
  }
  return OutcomeCurve(t_grid, std::move(means), std::move(ses),
                      CurveProvenance::RegressionAdjusted);
}

}  // namespace fuzzycausal
