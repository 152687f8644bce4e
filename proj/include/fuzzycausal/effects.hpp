#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/curve.hpp"
#include "fuzzycausal/distribution.hpp"

namespace fuzzycausal {

/// Denominators smaller than this make a normalized effect an error rather
/// than a large number.
inline constexpr double kDenomTol = 1e-9;

struct EffectDiagnostics {
  std::size_t grid_size = 0;
  std::size_t n_mc = 0;
  double max_se = 0.0;
  std::string curve_provenance;
};

/// Result of one causal-effect estimator. Normalized variants carry the
/// denominator so value * denominator reproduces the raw contrast.
struct EffectReport {
  std::string estimator;
  double value = 0.0;
  std::optional<double> denominator;
  std::string inputs_summary;
  EffectDiagnostics diagnostics;
  std::vector<std::string> assumptions;
};

/// E[Y(1)] - E[Y(0)] read off the curve (interpolated when needed).
EffectReport ate_binary(const OutcomeCurve& curve);

enum class PointwiseMode { UnitStep, Derivative };

/// ATE(t): unit-step contrast E[Y(t+1)] - E[Y(t)], or the curve derivative
/// at t (central difference at the curve's grid spacing).
double ate_pointwise(const OutcomeCurve& curve, double t, PointwiseMode mode);

/// ATE_P^Q: E_{t~Q}[E[Y(t)]] - E_{t~P}[E[Y(t)]].
EffectReport generalized_ate(const OutcomeCurve& curve,
                             const UnivariateDistribution& p,
                             const UnivariateDistribution& q);

/// Uniform assignment below/above the threshold T0 on the curve's universe.
EffectReport ate_uniform_threshold(const OutcomeCurve& curve,
                                   const Universe& universe, double t0);

/// FATE_A^B: generalized ATE under the standard-model densities of the pair.
EffectReport fate(const OutcomeCurve& curve, const AttributePair& pair);

/// NFATE = FATE / (E[T_B] - E[T_A]).
EffectReport nfate(const OutcomeCurve& curve, const AttributePair& pair);

/// GFATE: generalized ATE under the independent-model densities zeta_{T,A},
/// zeta_{T,B} built from the treatment distribution f_T.
EffectReport gfate(const OutcomeCurve& curve, const AttributePair& pair,
                   const UnivariateDistribution& f_t);

/// NGFATE = GFATE / (E[zeta_{T,B}] - E[zeta_{T,A}]).
EffectReport ngfate(const OutcomeCurve& curve, const AttributePair& pair,
                    const UnivariateDistribution& f_t);

/// NATE(d): generalized ATE divided by the d-th moment difference of (Q, P).
EffectReport nate_degree(const OutcomeCurve& curve,
                         const UnivariateDistribution& p,
                         const UnivariateDistribution& q, unsigned degree);

struct StabilityReport {
  double lhs = 0.0;      // |FATE(pair') - FATE(pair)|
  double rhs = 0.0;      // 2 M d((A,B),(A',B'))
  bool holds = false;    // lhs <= rhs + 1e-9
  std::optional<double> rhs_kl;  // M (sqrt(2 KL_A) + sqrt(2 KL_B))
  std::optional<bool> holds_kl;
};

/// Lipschitz stability check of FATE under a perturbed pair; M must bound
/// sup |E[Y(t)]| (verified against the curve). The KL bound is reported
/// when both divergences are defined on the grid.
StabilityReport stability_check(const OutcomeCurve& curve,
                                const AttributePair& pair,
                                const AttributePair& perturbed, double m);

}  // namespace fuzzycausal
