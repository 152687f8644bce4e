#include "fuzzycausal/universe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

Universe Universe::continuous(double a, double b, std::size_t grid_points) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    raise(ErrorCode::InvalidArgument,
          "continuous universe requires finite a < b");
  }
  if (grid_points < 2) {
    raise(ErrorCode::InvalidArgument, "universe grid needs at least 2 points");
  }
  Universe u;
  u.continuous_ = true;
  u.a_ = a;
  u.b_ = b;
  u.step_ = (b - a) / static_cast<double>(grid_points - 1);
  u.grid_.resize(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    u.grid_[i] = a + static_cast<double>(i) * u.step_;
  }
  u.grid_.back() = b;  // guard against accumulated rounding
  return u;
}

Universe Universe::discrete(std::vector<double> values) {
  if (values.empty()) {
    raise(ErrorCode::InvalidArgument, "discrete universe must be nonempty");
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      raise(ErrorCode::InvalidArgument,
            "discrete universe values must be strictly increasing");
    }
  }
  Universe u;
  u.continuous_ = false;
  u.a_ = values.front();
  u.b_ = values.back();
  u.step_ = 0.0;
  u.grid_ = std::move(values);
  return u;
}

bool Universe::contains(double t, double tol) const {
  if (continuous_) return t >= a_ - tol && t <= b_ + tol;
  for (double v : grid_) {
    if (std::abs(v - t) <= tol) return true;
  }
  return false;
}

std::size_t Universe::index_of(double t, double tol) const {
  if (continuous_) {
    raise(ErrorCode::InvalidArgument,
          "index_of applies to discrete universes only");
  }
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (std::abs(grid_[i] - t) <= tol) return i;
  }
  std::ostringstream oss;
  oss << "value " << t << " is not a member of the discrete universe";
  raise(ErrorCode::OutOfUniverse, oss.str());
}

std::vector<double> Universe::quadrature_weights() const {
  std::vector<double> w(grid_.size(), 1.0);
  if (continuous_) {
    std::fill(w.begin(), w.end(), step_);
    w.front() = step_ / 2.0;
    w.back() = step_ / 2.0;
  }
  return w;
}

bool Universe::operator==(const Universe& other) const {
  if (continuous_ != other.continuous_) return false;
  if (continuous_) {
    return a_ == other.a_ && b_ == other.b_ &&
           grid_.size() == other.grid_.size();
  }
  return grid_ == other.grid_;
}

}  // namespace fuzzycausal
