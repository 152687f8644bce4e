#pragma once

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/distribution.hpp"

namespace fuzzycausal {

/// L1 distance of two distributions on a shared universe.
double l1_distance(const UnivariateDistribution& p,
                   const UnivariateDistribution& q);

/// Distance between fuzzy attributes: the L1 distance of their standard-model
/// densities. Attributes carrying a non-standard density model should be
/// compared with l1_distance on those densities directly.
double attribute_l1_distance(const FuzzyAttribute& f,
                             const FuzzyAttribute& g);

/// sqrt(d(A,A')^2 + d(B,B')^2) on the component attribute distances.
double pair_distance(const AttributePair& p, const AttributePair& q);

}  // namespace fuzzycausal
