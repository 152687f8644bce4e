#include "fuzzycausal/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

const char* provenance_name(CurveProvenance p) {
  switch (p) {
    case CurveProvenance::OracleMonteCarlo:
      return "oracle-MC";
    case CurveProvenance::RegressionAdjusted:
      return "regression-adjusted";
    case CurveProvenance::FuzzySystem:
      return "fuzzy-system";
  }
  return "unknown";
}

OutcomeCurve::OutcomeCurve(std::vector<double> t_grid,
                           std::vector<double> estimates,
                           std::vector<double> std_errors,
                           CurveProvenance provenance)
    : t_(std::move(t_grid)),
      y_(std::move(estimates)),
      se_(std::move(std_errors)),
      provenance_(provenance) {
  if (t_.size() < 2 || t_.size() != y_.size() || t_.size() != se_.size()) {
    raise(ErrorCode::InvalidArgument,
          "curve needs >= 2 grid points with matching estimate/se arrays");
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i > 0 && !(t_[i - 1] < t_[i])) {
      raise(ErrorCode::InvalidArgument,
            "curve grid must be strictly increasing");
    }
    if (!std::isfinite(y_[i])) {
      raise(ErrorCode::InvalidArgument, "curve estimates must be finite");
    }
  }
}

double OutcomeCurve::interpolate(const std::vector<double>& values,
                                 double t) const {
  const double slack = 1e-9 * (1.0 + std::abs(t_.front()) + std::abs(t_.back()));
  if (t < t_.front() - slack || t > t_.back() + slack) {
    std::ostringstream oss;
    oss << "t=" << t << " outside the curve grid [" << t_.front() << ", "
        << t_.back() << "]";
    raise(ErrorCode::GridMissingPoints, oss.str());
  }
  if (t <= t_.front()) return values.front();
  if (t >= t_.back()) return values.back();
  auto hi = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t i = static_cast<std::size_t>(hi - t_.begin());
  const double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
  return values[i - 1] + w * (values[i] - values[i - 1]);
}

double OutcomeCurve::value(double t) const { return interpolate(y_, t); }

double OutcomeCurve::se(double t) const { return interpolate(se_, t); }

double OutcomeCurve::sup_abs() const {
  double m = 0.0;
  for (double v : y_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> OutcomeCurve::derivative() const {
  const std::size_t n = t_.size();
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    d[i] = (y_[i + 1] - y_[i - 1]) / (t_[i + 1] - t_[i - 1]);
  }
  if (n >= 3) {
    // Second-order one-sided stencils assuming a uniform grid.
    const double h0 = t_[1] - t_[0];
    const double hn = t_[n - 1] - t_[n - 2];
    d[0] = (-3.0 * y_[0] + 4.0 * y_[1] - y_[2]) / (2.0 * h0);
    d[n - 1] = (3.0 * y_[n - 1] - 4.0 * y_[n - 2] + y_[n - 3]) / (2.0 * hn);
  } else {
    const double slope = (y_[1] - y_[0]) / (t_[1] - t_[0]);
    d[0] = d[n - 1] = slope;
  }
  return d;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo < hi)) {
    raise(ErrorCode::InvalidArgument, "linspace needs lo < hi and count >= 2");
  }
  std::vector<double> out(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + static_cast<double>(i) * h;
  }
  out.back() = hi;
  return out;
}

}  // namespace fuzzycausal
