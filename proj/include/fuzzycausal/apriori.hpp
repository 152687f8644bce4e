#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fuzzycausal/dataset.hpp"
#include "fuzzycausal/mamdani.hpp"

namespace fuzzycausal {

/// Item: one (column, partition index) assignment in a labeled dataset.
struct Item {
  std::size_t column = 0;
  std::size_t label = 0;

  auto operator<=>(const Item&) const = default;
};

using ItemSet = std::vector<Item>;  // sorted, unique columns

/// Level-wise Apriori over the labeled columns: all itemsets (at most one
/// item per column) whose row support reaches min_support, mapped to their
/// support fraction.
std::map<ItemSet, double> frequent_itemsets(const LabeledDataset& labeled,
                                            const std::vector<std::size_t>&
                                                columns,
                                            double min_support);

struct MinedRule {
  std::vector<std::size_t> antecedent_labels;  // per antecedent column
  std::size_t consequent_label = 0;
  double support = 0.0;     // fraction of rows matching antecedent+consequent
  double confidence = 0.0;  // support / antecedent support
};

/// Association rules with full antecedents: for every frequent itemset with
/// one item per antecedent column, the highest-confidence consequent label
/// meeting min_confidence (ties break toward the lower label).
std::vector<MinedRule> mine_rules(const LabeledDataset& labeled,
                                  const std::vector<std::string>&
                                      antecedent_columns,
                                  const std::string& consequent_column,
                                  double min_support, double min_confidence);

/// Full pipeline: mined rules assembled into a deterministic Mamdani rule
/// base over the given partitions. Throws NoRulesFound when nothing passes
/// the thresholds.
RuleBase extract_rules_apriori(const LabeledDataset& labeled,
                               const std::vector<ColumnPartition>&
                                   antecedent_partitions,
                               const ColumnPartition& consequent_partition,
                               double min_support, double min_confidence,
                               std::size_t output_grid_points = 1001,
                               NoFirePolicy policy = NoFirePolicy::Error);

}  // namespace fuzzycausal
