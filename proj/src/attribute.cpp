#include "fuzzycausal/attribute.hpp"

#include <algorithm>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

FuzzyAttribute::FuzzyAttribute(std::string label, Universe universe,
                               MembershipFunction mu)
    : label_(std::move(label)),
      universe_(std::move(universe)),
      mu_(std::move(mu)) {
  double min_v = 1.0;
  double max_v = 0.0;
  for (double t : universe_.points()) {
    const double v = mu_.evaluate(t);
    if (v < -0.0 || v > 1.0 + 1e-12) {
      std::ostringstream oss;
      oss << "membership of '" << label_ << "' leaves [0,1] at t=" << t
          << " (value " << v << ")";
      raise(ErrorCode::InvalidArgument, oss.str());
    }
    min_v = std::min(min_v, v);
    max_v = std::max(max_v, v);
  }
  grid_min_ = min_v;
  if (mu_.kind() != MembershipFunction::Kind::Gaussian &&
      grid_min_ > kZeroTol) {
    std::ostringstream oss;
    oss << "'" << label_ << "' is not a fuzzy attribute: membership minimum "
        << grid_min_ << " on the grid exceeds " << kZeroTol;
    raise(ErrorCode::NotFuzzyAttribute, oss.str());
  }
}

double FuzzyAttribute::evaluate(double t) const {
  if (!universe_.contains(t)) {
    std::ostringstream oss;
    oss << "t=" << t << " lies outside the universe of '" << label_ << "'";
    raise(ErrorCode::OutOfUniverse, oss.str());
  }
  return mu_.evaluate(t);
}

std::vector<double> FuzzyAttribute::grid_values() const {
  std::vector<double> out;
  out.reserve(universe_.size());
  for (double t : universe_.points()) out.push_back(mu_.evaluate(t));
  return out;
}

FuzzyAttribute FuzzyAttribute::scaled(double c,
                                      const std::string& new_label) const {
  return FuzzyAttribute(new_label.empty() ? label_ : new_label, universe_,
                        mu_.scaled(c));
}

AttributePair::AttributePair(FuzzyAttribute from, FuzzyAttribute to)
    : a(std::move(from)), b(std::move(to)) {
  if (a.universe() != b.universe()) {
    raise(ErrorCode::UniverseMismatch,
          "attribute pair requires a shared universe");
  }
}

double eval_membership(const FuzzyAttribute& attr, double t) {
  return attr.evaluate(t);
}

FuzzyAttribute mirror_attribute(const FuzzyAttribute& attr) {
  if (!attr.universe().is_continuous()) {
    raise(ErrorCode::UniverseMismatch,
          "mirror_attribute requires a continuous universe");
  }
  const double a = attr.universe().lower();
  const double b = attr.universe().upper();
  return FuzzyAttribute(attr.label() + "_mirror", attr.universe(),
                        attr.mu().mirrored(a, b));
}

std::vector<FuzzyAttribute> make_partition(const Universe& universe,
                                           std::size_t n,
                                           PartitionFamily family,
                                           const std::string& label_prefix,
                                           double sigma_override) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(label_prefix + std::to_string(k));
  }
  return make_partition(universe, n, family, std::move(labels),
                        sigma_override);
}

std::vector<FuzzyAttribute> make_partition(const Universe& universe,
                                           std::size_t n,
                                           PartitionFamily family,
                                           std::vector<std::string> labels,
                                           double sigma_override) {
  if (n < 2) {
    raise(ErrorCode::BadCount, "partition needs at least 2 attributes");
  }
  if (!universe.is_continuous()) {
    raise(ErrorCode::UniverseMismatch,
          "make_partition requires a continuous universe");
  }
  if (labels.size() != n) {
    raise(ErrorCode::InvalidArgument, "partition label count mismatch");
  }
  const double a = universe.lower();
  const double b = universe.upper();
  const double spacing = (b - a) / static_cast<double>(n - 1);

  std::vector<double> peaks(n);
  for (std::size_t k = 0; k < n; ++k) {
    peaks[k] = a + static_cast<double>(k) * spacing;
  }
  peaks.back() = b;

  std::vector<FuzzyAttribute> out;
  out.reserve(n);
  if (family == PartitionFamily::Triangular) {
    if (n == 2) {
      // The two-term case is the canonical low/high pair: both terms reach
      // zero at the interval midpoint rather than at the opposite peak.
      const double mid = a + (b - a) / 2.0;
      out.emplace_back(labels[0], universe,
                       MembershipFunction::triangular(a, a, mid));
      out.emplace_back(labels[1], universe,
                       MembershipFunction::triangular(mid, b, b));
      return out;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double left = k == 0 ? peaks[0] : peaks[k - 1];
      const double right = k + 1 == n ? peaks[n - 1] : peaks[k + 1];
      out.emplace_back(labels[k], universe,
                       MembershipFunction::triangular(left, peaks[k], right));
    }
    return out;
  }

  const double sigma =
      sigma_override > 0.0 ? sigma_override
                           : (b - a) / (2.0 * static_cast<double>(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(labels[k], universe,
                     MembershipFunction::gaussian(peaks[k], sigma));
  }
  return out;
}

}  // namespace fuzzycausal
