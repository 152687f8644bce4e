#include "fuzzycausal/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

namespace {

double weighted_mass(const Universe& u, const std::vector<double>& v) {
  const auto w = u.quadrature_weights();
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) m += w[i] * v[i];
  return m;
}

}  // namespace

UnivariateDistribution::UnivariateDistribution(Universe universe,
                                               std::vector<double> values,
                                               double raw_mass)
    : universe_(std::move(universe)),
      values_(std::move(values)),
      raw_mass_(raw_mass) {}

UnivariateDistribution UnivariateDistribution::from_values(
    Universe universe, std::vector<double> values) {
  if (values.size() != universe.size()) {
    raise(ErrorCode::UniverseMismatch,
          "distribution values do not match the universe grid");
  }
  for (double v : values) {
    if (v < 0.0 || !std::isfinite(v)) {
      raise(ErrorCode::InvalidArgument,
            "distribution values must be finite and nonnegative");
    }
  }
  const double mass = weighted_mass(universe, values);
  if (mass < kMassTol) {
    raise(ErrorCode::DegenerateAttribute,
          "distribution mass below tolerance; refusing to normalize");
  }
  for (double& v : values) v /= mass;
  return UnivariateDistribution(std::move(universe), std::move(values), mass);
}

UnivariateDistribution UnivariateDistribution::uniform(
    const Universe& universe) {
  return from_values(universe, std::vector<double>(universe.size(), 1.0));
}

UnivariateDistribution UnivariateDistribution::point_mass(
    const Universe& universe, double at) {
  if (!universe.is_discrete()) {
    raise(ErrorCode::InvalidArgument,
          "point_mass requires a discrete universe");
  }
  std::vector<double> v(universe.size(), 0.0);
  v[universe.index_of(at)] = 1.0;
  return from_values(universe, std::move(v));
}

UnivariateDistribution UnivariateDistribution::truncated_normal(
    const Universe& universe, double mean, double stddev) {
  if (!(stddev > 0.0)) {
    raise(ErrorCode::InvalidArgument, "stddev must be positive");
  }
  std::vector<double> v;
  v.reserve(universe.size());
  for (double t : universe.points()) {
    const double z = (t - mean) / stddev;
    v.push_back(std::exp(-0.5 * z * z));
  }
  return from_values(universe, std::move(v));
}

double UnivariateDistribution::total_mass() const {
  return weighted_mass(universe_, values_);
}

double UnivariateDistribution::expectation(
    const std::function<double(double)>& g) const {
  const auto w = universe_.quadrature_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += w[i] * values_[i] * g(universe_.point(i));
  }
  return acc;
}

double UnivariateDistribution::moment(unsigned degree) const {
  return expectation([degree](double t) {
    double p = 1.0;
    for (unsigned k = 0; k < degree; ++k) p *= t;
    return p;
  });
}

double UnivariateDistribution::variance() const {
  const double m1 = moment(1);
  return moment(2) - m1 * m1;
}

std::vector<double> UnivariateDistribution::cdf() const {
  std::vector<double> c(values_.size(), 0.0);
  if (universe_.is_continuous()) {
    const double h = universe_.step();
    for (std::size_t i = 1; i < values_.size(); ++i) {
      c[i] = c[i - 1] + 0.5 * h * (values_[i - 1] + values_[i]);
    }
  } else {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      acc += values_[i];
      c[i] = acc;
    }
  }
  return c;
}

std::vector<double> UnivariateDistribution::sample(std::size_t n,
                                                   RandomSource& rng) const {
  const auto c = cdf();
  const double total = c.back();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = rng.uniform01() * total;
    // First index whose cumulative mass exceeds u: skips zero-probability
    // atoms and never lands before the first positive cell.
    auto it = std::upper_bound(c.begin(), c.end(), u);
    std::size_t i =
        std::min(static_cast<std::size_t>(it - c.begin()), c.size() - 1);
    if (universe_.is_discrete()) {
      out.push_back(universe_.point(i));
      continue;
    }
    if (i == 0) {
      out.push_back(universe_.point(0));
      continue;
    }
    const double c0 = c[i - 1], c1 = c[i];
    const double w = c1 > c0 ? std::min(1.0, (u - c0) / (c1 - c0)) : 0.0;
    out.push_back(universe_.point(i - 1) + w * universe_.step());
  }
  return out;
}

UnivariateDistribution standard_density(const FuzzyAttribute& attr) {
  return UnivariateDistribution::from_values(attr.universe(),
                                             attr.grid_values());
}

UnivariateDistribution independent_density(const FuzzyAttribute& attr,
                                           const UnivariateDistribution& f_t) {
  if (attr.universe() != f_t.universe()) {
    raise(ErrorCode::UniverseMismatch,
          "independent_density requires the attribute and f_T to share a "
          "universe");
  }
  const auto f_a = standard_density(attr);
  std::vector<double> prod(f_a.values().size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    prod[i] = f_a.value(i) * f_t.value(i);
  }
  const auto w = attr.universe().quadrature_weights();
  double overlap = 0.0;
  for (std::size_t i = 0; i < prod.size(); ++i) overlap += w[i] * prod[i];
  if (overlap < kMassTol) {
    raise(ErrorCode::NoOverlap,
          "f_T and the attribute density have no overlapping mass");
  }
  return UnivariateDistribution::from_values(attr.universe(), std::move(prod));
}

UnivariateDistribution uniform_threshold(const Universe& universe, double t0,
                                         ThresholdSide side) {
  if (universe.is_discrete()) {
    std::vector<double> v(universe.size(), 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const double t = universe.point(i);
      const bool keep =
          side == ThresholdSide::Above ? t >= t0 : t <= t0;
      if (keep) {
        v[i] = 1.0;
        ++count;
      }
    }
    if (count == 0) {
      raise(ErrorCode::EmptySide,
            "no discrete universe values on the requested side of T0");
    }
    return UnivariateDistribution::from_values(universe, std::move(v));
  }

  const double a = universe.lower();
  const double b = universe.upper();
  const double lo = side == ThresholdSide::Above ? t0 : a;
  const double hi = side == ThresholdSide::Above ? b : t0;
  if (!(hi - lo > 0.0)) {
    raise(ErrorCode::EmptySide,
          "zero-length segment on the requested side of T0");
  }
  std::vector<double> v(universe.size(), 0.0);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const double t = universe.point(i);
    if (t >= lo && t <= hi) v[i] = 1.0;
  }
  return UnivariateDistribution::from_values(universe, std::move(v));
}

double kl_divergence(const UnivariateDistribution& p,
                     const UnivariateDistribution& q) {
  if (p.universe() != q.universe()) {
    raise(ErrorCode::UniverseMismatch,
          "KL divergence requires a shared universe");
  }
  const auto w = p.universe().quadrature_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    const double pi = p.value(i);
    const double qi = q.value(i);
    if (pi <= 0.0) continue;  // 0 log 0 = 0
    if (qi <= 0.0) {
      std::ostringstream oss;
      oss << "KL support violation: Q vanishes at t="
          << p.universe().point(i) << " where P is positive";
      raise(ErrorCode::SupportViolation, oss.str());
    }
    acc += w[i] * pi * std::log(pi / qi);
  }
  return std::max(acc, 0.0);
}

}  // namespace fuzzycausal
