#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/curve.hpp"
#include "fuzzycausal/dataset.hpp"
#include "fuzzycausal/distribution.hpp"
#include "fuzzycausal/random.hpp"

namespace fuzzycausal {

enum class Connective { And, Or };

enum class Defuzzifier { Centroid, Bisector, MeanOfMax, SmallestOfMax,
                         LargestOfMax };

Defuzzifier defuzzifier_from_name(const std::string& name);
const char* defuzzifier_name(Defuzzifier method);

/// What to do when no rule fires above threshold: surface the gap as an
/// error, or fall back to the midpoint of the output universe.
enum class NoFirePolicy { Error, Midpoint };

/// IF-THEN rule over named variables and partition labels. Rules sharing an
/// identical antecedent form a probability group; a deterministic rule is a
/// singleton group with probability 1.
struct FuzzyRule {
  std::vector<std::pair<std::string, std::string>> antecedent;
  Connective connective = Connective::And;
  std::pair<std::string, std::string> consequent;
  double probability = 1.0;
};

struct VariableDef {
  std::string name;
  Universe universe;
  std::vector<FuzzyAttribute> partition;
};

struct AggregatedOutput {
  std::vector<double> grid;
  std::vector<double> membership;
};

/// Mamdani rule base: min implication (clipping), max aggregation, AND = min,
/// OR = max. Immutable after construction; inference is pure.
class RuleBase {
 public:
  RuleBase(std::vector<VariableDef> inputs, VariableDef output,
           std::vector<FuzzyRule> rules, std::size_t output_grid_points = 1001,
           NoFirePolicy policy = NoFirePolicy::Error);

  const std::vector<VariableDef>& inputs() const noexcept { return inputs_; }
  const VariableDef& output() const noexcept { return output_; }
  const std::vector<FuzzyRule>& rules() const noexcept { return rules_; }
  std::size_t output_grid_points() const noexcept { return out_grid_.size(); }
  const std::vector<double>& output_grid() const noexcept { return out_grid_; }
  NoFirePolicy policy() const noexcept { return policy_; }

  /// Rule indices per antecedent group, in rule order.
  const std::vector<std::vector<std::size_t>>& groups() const noexcept {
    return groups_;
  }

  const VariableDef& input(const std::string& name) const;
  const FuzzyAttribute& attribute(const std::string& variable,
                                  const std::string& label) const;

  /// Firing strength of one rule: min (AND) or max (OR) over clause degrees.
  double rule_strength(const FuzzyRule& rule,
                       const std::map<std::string, double>& inputs) const;

  /// Clip-and-max aggregation over the given rules (all rules by default).
  AggregatedOutput aggregate(const std::map<std::string, double>& inputs,
                             const std::vector<std::size_t>* rule_subset =
                                 nullptr) const;

  double infer(const std::map<std::string, double>& inputs,
               Defuzzifier method) const;

  /// Exact expectation over rule configurations: one rule per group,
  /// configuration probability = product of rule probabilities. Guarded at
  /// 4096 configurations.
  double prob_infer_expectation(const std::map<std::string, double>& inputs,
                                Defuzzifier method) const;

 private:
  std::vector<double> clause_degrees(
      const std::map<std::string, double>& inputs) const;
  double strength_from_degrees(std::size_t rule_idx,
                               const std::vector<double>& degrees) const;
  double defuzz_or_policy(const AggregatedOutput& agg, double max_strength,
                          Defuzzifier method) const;

  std::vector<VariableDef> inputs_;
  VariableDef output_;
  std::vector<FuzzyRule> rules_;
  NoFirePolicy policy_;
  std::vector<double> out_grid_;

  // Resolved at construction.
  struct ClauseRef { std::size_t input; std::size_t attribute; };
  std::vector<std::size_t> input_offsets_;
  std::vector<std::vector<ClauseRef>> rule_clauses_;
  std::vector<std::size_t> rule_consequent_;        // output attribute index
  std::vector<std::vector<double>> consequent_mu_;  // on out_grid_
  std::vector<std::pair<std::size_t, std::size_t>> consequent_span_;
  std::vector<std::vector<std::size_t>> groups_;
};

double defuzzify(const AggregatedOutput& agg, Defuzzifier method);

/// E[Y | do(T=t)] through the fuzzy system: for each grid t, the confounder
/// is averaged out with n_mc posterior-free draws from confounder_dist. The
/// same confounder sample is reused across the grid. Requires a base with
/// exactly two inputs (treatment plus one confounder).
OutcomeCurve outcome_curve_via_rules(const RuleBase& base,
                                     const std::string& treatment,
                                     const UnivariateDistribution& confounder,
                                     const std::vector<double>& t_grid,
                                     std::size_t n_mc, RandomSource rng,
                                     Defuzzifier method, bool probabilistic);

struct ColumnPartition {
  std::string column;
  std::vector<FuzzyAttribute> partition;
};

/// Replaces each cell with the index of the attribute of maximal membership
/// in that column's partition; ties break toward the lowest index.
LabeledDataset fuzzify_dataset(const Dataset& data,
                               const std::vector<ColumnPartition>& partitions);

}  // namespace fuzzycausal
