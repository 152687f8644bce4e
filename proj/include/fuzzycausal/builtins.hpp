#pragma once

#include <string>

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/mamdani.hpp"
#include "fuzzycausal/scm.hpp"

namespace fuzzycausal {
namespace builtins {

/// age ~ N(65,5); sodium = age/18 + N(0,1); bloodpressure = 1.05 sodium +
/// 2 age + N(0,1); proteinuria = 0.4 sodium + 0.3 bloodpressure + N(0,1).
/// Treatment sodium, outcome bloodpressure.
ScmSpec sodium_scm();

/// True treatment coefficient of the sodium model.
inline constexpr double kSodiumBeta = 1.05;

/// Canonical low/high pairs on [a, b] mirroring the four reference shapes:
///  - fig1a: triangles meeting at the midpoint
///  - fig1b: triangles with low vanishing at a + m (0 < m < b-a)
///  - fig1c: trapezoids with shoulders at the quarter points
///  - fig1d: gaussians at the endpoints with sigma = (b-a)/4
AttributePair fig1a_pair(const Universe& universe);
AttributePair fig1b_pair(const Universe& universe, double m);
AttributePair fig1c_pair(const Universe& universe);
AttributePair fig1d_pair(const Universe& universe);

/// Pair lookup by name ("fig1a".."fig1d"); fig1b uses m = 0.6 (b-a).
AttributePair named_pair(const std::string& name, const Universe& universe);

/// Three-term triangular partition with peaks at {min, mid, max}.
std::vector<FuzzyAttribute> three_term_partition(
    const Universe& universe, const std::string& low_label,
    const std::string& mid_label, const std::string& high_label);

/// Tipping rule base: quality/service on [0,10] (poor/average/good), tip on
/// [0,25] (low/medium/high), rules
///   R1: quality poor or service poor -> tip low
///   R2: service average             -> tip medium
///   R3: quality good or service good -> tip high
RuleBase tipping_rulebase(NoFirePolicy policy = NoFirePolicy::Error);

/// Probabilistic variant: each antecedent above keeps its deterministic
/// consequent with probability 0.7 and moves one step (low->medium,
/// medium->high, high->medium) with probability 0.3.
RuleBase tipping_prob_rulebase(NoFirePolicy policy = NoFirePolicy::Error);

/// Scale (standard deviation) of the tipping service/quality normals. The
/// reference experiments say "variance of 2" but pass 2 as the scale
/// argument of normal(), matching how the sodium generator passes its
/// spreads; the numbers they report only reconcile with scale = 2.
inline constexpr double kTippingScale = 2.0;

/// Service confounder S ~ normal(7, scale) truncated to [0,10].
UnivariateDistribution tipping_service_dist(double scale = kTippingScale);

/// Food-quality marginal ~ normal(5, scale) truncated to [0,10]; used as
/// f_T for the tipping GFATE/NGFATE.
UnivariateDistribution tipping_quality_dist(double scale = kTippingScale);

}  // namespace builtins
}  // namespace fuzzycausal
