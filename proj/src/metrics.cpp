#include "fuzzycausal/metrics.hpp"

#include <cmath>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

double l1_distance(const UnivariateDistribution& p,
                   const UnivariateDistribution& q) {
  if (p.universe() != q.universe()) {
    raise(ErrorCode::UniverseMismatch, "L1 distance requires a shared grid");
  }
  const auto w = p.universe().quadrature_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.values().size(); ++i) {
    acc += w[i] * std::abs(p.value(i) - q.value(i));
  }
  return acc;
}

double attribute_l1_distance(const FuzzyAttribute& f,
                             const FuzzyAttribute& g) {
  if (f.universe() != g.universe()) {
    raise(ErrorCode::UniverseMismatch,
          "attribute distance requires a shared universe");
  }
  return l1_distance(standard_density(f), standard_density(g));
}

double pair_distance(const AttributePair& p, const AttributePair& q) {
  const double da = attribute_l1_distance(p.a, q.a);
  const double db = attribute_l1_distance(p.b, q.b);
  return std::sqrt(da * da + db * db);
}

}  // namespace fuzzycausal
