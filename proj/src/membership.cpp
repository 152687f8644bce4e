#include "fuzzycausal/membership.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

namespace {

void check_height(double h) {
  if (!(h > 0.0) || h > 1.0) {
    raise(ErrorCode::InvalidArgument, "membership height must be in (0, 1]");
  }
}

}  // namespace

MembershipFunction::MembershipFunction(Kind kind, std::vector<double> params,
                                       double height)
    : kind_(kind), height_(height), params_(std::move(params)) {}

MembershipFunction MembershipFunction::triangular(double left, double peak,
                                                  double right,
                                                  double height) {
  check_height(height);
  if (!(left <= peak && peak <= right)) {
    raise(ErrorCode::InvalidArgument,
          "triangular vertices must satisfy left <= peak <= right");
  }
  return MembershipFunction(Kind::Triangular, {left, peak, right}, height);
}

MembershipFunction MembershipFunction::trapezoidal(double left,
                                                   double peak_left,
                                                   double peak_right,
                                                   double right,
                                                   double height) {
  check_height(height);
  if (!(left <= peak_left && peak_left <= peak_right && peak_right <= right)) {
    raise(ErrorCode::InvalidArgument,
          "trapezoidal vertices must be nondecreasing");
  }
  return MembershipFunction(Kind::Trapezoidal,
                            {left, peak_left, peak_right, right}, height);
}

MembershipFunction MembershipFunction::gaussian(double mean, double sigma,
                                                double height) {
  check_height(height);
  if (!(sigma > 0.0)) {
    raise(ErrorCode::InvalidArgument, "gaussian sigma must be positive");
  }
  return MembershipFunction(Kind::Gaussian, {mean, sigma}, height);
}

MembershipFunction MembershipFunction::piecewise_linear(
    std::vector<std::pair<double, double>> vertices) {
  if (vertices.size() < 2) {
    raise(ErrorCode::InvalidArgument,
          "piecewise-linear shape needs at least two vertices");
  }
  double max_y = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && !(vertices[i - 1].first < vertices[i].first)) {
      raise(ErrorCode::InvalidArgument,
            "piecewise-linear vertices must have strictly increasing x");
    }
    if (vertices[i].second < 0.0 || vertices[i].second > 1.0) {
      raise(ErrorCode::InvalidArgument,
            "piecewise-linear membership values must lie in [0, 1]");
    }
    max_y = std::max(max_y, vertices[i].second);
  }
  if (max_y == 0.0) {
    raise(ErrorCode::InvalidArgument,
          "piecewise-linear shape must attain a positive value");
  }
  MembershipFunction mf(Kind::PiecewiseLinear, {}, max_y);
  mf.vertices_ = std::move(vertices);
  return mf;
}

MembershipFunction MembershipFunction::crisp_indicator(
    std::vector<double> subset, double height) {
  check_height(height);
  if (subset.empty()) {
    raise(ErrorCode::InvalidArgument, "crisp indicator subset is empty");
  }
  std::sort(subset.begin(), subset.end());
  return MembershipFunction(Kind::CrispIndicator, std::move(subset), height);
}

double MembershipFunction::evaluate(double t) const {
  switch (kind_) {
    case Kind::Triangular: {
      const double l = params_[0], p = params_[1], r = params_[2];
      if (t < l || t > r) return 0.0;
      if (t == p) return height_;
      if (t < p) return p == l ? height_ : height_ * (t - l) / (p - l);
      return r == p ? height_ : height_ * (r - t) / (r - p);
    }
    case Kind::Trapezoidal: {
      const double l = params_[0], pl = params_[1], pr = params_[2],
                   r = params_[3];
      if (t < l || t > r) return 0.0;
      if (t >= pl && t <= pr) return height_;
      if (t < pl) return pl == l ? height_ : height_ * (t - l) / (pl - l);
      return r == pr ? height_ : height_ * (r - t) / (r - pr);
    }
    case Kind::Gaussian: {
      const double m = params_[0], s = params_[1];
      const double z = (t - m) / s;
      return height_ * std::exp(-0.5 * z * z);
    }
    case Kind::PiecewiseLinear: {
      if (t <= vertices_.front().first) return vertices_.front().second;
      if (t >= vertices_.back().first) return vertices_.back().second;
      auto hi = std::upper_bound(
          vertices_.begin(), vertices_.end(), t,
          [](double x, const auto& v) { return x < v.first; });
      auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
    case Kind::CrispIndicator: {
      for (double v : params_) {
        if (std::abs(v - t) <= 1e-9) return height_;
      }
      return 0.0;
    }
  }
  return 0.0;
}

MembershipFunction MembershipFunction::scaled(double c) const {
  if (!(c > 0.0) || c > 1.0) {
    raise(ErrorCode::InvalidArgument, "scale factor must be in (0, 1]");
  }
  MembershipFunction out = *this;
  out.height_ = height_ * c;
  if (kind_ == Kind::PiecewiseLinear) {
    for (auto& v : out.vertices_) v.second *= c;
  }
  return out;
}

MembershipFunction MembershipFunction::mirrored(double a, double b) const {
  const double s = a + b;
  switch (kind_) {
    case Kind::Triangular:
      return MembershipFunction(
          Kind::Triangular, {s - params_[2], s - params_[1], s - params_[0]},
          height_);
    case Kind::Trapezoidal:
      return MembershipFunction(Kind::Trapezoidal,
                                {s - params_[3], s - params_[2],
                                 s - params_[1], s - params_[0]},
                                height_);
    case Kind::Gaussian:
      return MembershipFunction(Kind::Gaussian, {s - params_[0], params_[1]},
                                height_);
    case Kind::PiecewiseLinear: {
      std::vector<std::pair<double, double>> mirrored(vertices_.rbegin(),
                                                      vertices_.rend());
      for (auto& v : mirrored) v.first = s - v.first;
      return piecewise_linear(std::move(mirrored));
    }
    case Kind::CrispIndicator: {
      std::vector<double> mapped(params_.rbegin(), params_.rend());
      for (double& v : mapped) v = s - v;
      return crisp_indicator(std::move(mapped), height_);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown membership kind");
}

}  // namespace fuzzycausal
