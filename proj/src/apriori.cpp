#include "fuzzycausal/apriori.hpp"

#include <algorithm>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

namespace {

bool row_matches(const LabeledDataset& labeled, std::size_t row,
                 const ItemSet& items) {
  for (const auto& item : items) {
    if (labeled.columns[item.column][row] != item.label) return false;
  }
  return true;
}

double support_of(const LabeledDataset& labeled, const ItemSet& items) {
  const std::size_t n = labeled.n_rows();
  std::size_t hits = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (row_matches(labeled, r, items)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace

std::map<ItemSet, double> frequent_itemsets(
    const LabeledDataset& labeled, const std::vector<std::size_t>& columns,
    double min_support) {
  if (!(min_support > 0.0) || min_support > 1.0) {
    raise(ErrorCode::InvalidArgument, "min_support must lie in (0, 1]");
  }
  std::map<ItemSet, double> frequent;

  // Level 1.
  std::vector<ItemSet> level;
  for (std::size_t c : columns) {
    std::size_t n_labels = 0;
    for (std::size_t v : labeled.columns[c]) {
      n_labels = std::max(n_labels, v + 1);
    }
    for (std::size_t l = 0; l < n_labels; ++l) {
      ItemSet candidate{{c, l}};
      const double s = support_of(labeled, candidate);
      if (s >= min_support) {
        frequent.emplace(candidate, s);
        level.push_back(std::move(candidate));
      }
    }
  }

  // Level k from level k-1: join itemsets sharing a (k-2)-prefix, skip
  // same-column items, prune candidates with an infrequent subset.
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    std::vector<ItemSet> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        const ItemSet& a = level[i];
        const ItemSet& b = level[j];
        if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) {
          continue;  // sorted: once prefixes diverge they stay diverged
        }
        if (a.back().column == b.back().column) continue;
        ItemSet candidate = a;
        candidate.push_back(b.back());
        std::sort(candidate.begin(), candidate.end());

        bool all_subsets_frequent = true;
        for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
          ItemSet subset;
          subset.reserve(candidate.size() - 1);
          for (std::size_t k = 0; k < candidate.size(); ++k) {
            if (k != drop) subset.push_back(candidate[k]);
          }
          if (!frequent.contains(subset)) {
            all_subsets_frequent = false;
            break;
          }
        }
        if (!all_subsets_frequent) continue;
        if (frequent.contains(candidate)) continue;

        const double s = support_of(labeled, candidate);
        if (s >= min_support) {
          frequent.emplace(candidate, s);
          next.push_back(std::move(candidate));
        }
      }
    }
    level = std::move(next);
  }
  return frequent;
}

std::vector<MinedRule> mine_rules(
    const LabeledDataset& labeled,
    const std::vector<std::string>& antecedent_columns,
    const std::string& consequent_column, double min_support,
    double min_confidence) {
  if (!(min_confidence > 0.0) || min_confidence > 1.0) {
    raise(ErrorCode::InvalidArgument, "min_confidence must lie in (0, 1]");
  }
  std::vector<std::size_t> ant_cols;
  ant_cols.reserve(antecedent_columns.size());
  for (const auto& name : antecedent_columns) {
    ant_cols.push_back(labeled.column_index(name));
  }
  const std::size_t cons_col = labeled.column_index(consequent_column);

  const auto frequent = frequent_itemsets(labeled, ant_cols, min_support);

  std::size_t n_cons_labels = 0;
  for (std::size_t v : labeled.columns[cons_col]) {
    n_cons_labels = std::max(n_cons_labels, v + 1);
  }

  std::vector<MinedRule> rules;
  for (const auto& [itemset, ant_support] : frequent) {
    if (itemset.size() != ant_cols.size()) continue;  // full antecedents only

    MinedRule best;
    bool found = false;
    for (std::size_t l = 0; l < n_cons_labels; ++l) {
      ItemSet full = itemset;
      full.push_back({cons_col, l});
      std::sort(full.begin(), full.end());
      const double joint = support_of(labeled, full);
      const double confidence = joint / ant_support;
      if (confidence >= min_confidence &&
          (!found || confidence > best.confidence)) {
        best.consequent_label = l;
        best.support = joint;
        best.confidence = confidence;
        found = true;
      }
    }
    if (!found) continue;

    best.antecedent_labels.resize(ant_cols.size(), 0);
    for (const auto& item : itemset) {
      for (std::size_t k = 0; k < ant_cols.size(); ++k) {
        if (ant_cols[k] == item.column) best.antecedent_labels[k] = item.label;
      }
    }
    rules.push_back(std::move(best));
  }
  return rules;
}

RuleBase extract_rules_apriori(
    const LabeledDataset& labeled,
    const std::vector<ColumnPartition>& antecedent_partitions,
    const ColumnPartition& consequent_partition, double min_support,
    double min_confidence, std::size_t output_grid_points,
    NoFirePolicy policy) {
  std::vector<std::string> ant_names;
  ant_names.reserve(antecedent_partitions.size());
  for (const auto& cp : antecedent_partitions) ant_names.push_back(cp.column);

  const auto mined = mine_rules(labeled, ant_names, consequent_partition.column,
                                min_support, min_confidence);
  if (mined.empty()) {
    std::ostringstream oss;
    oss << "no rules pass min_support=" << min_support
        << ", min_confidence=" << min_confidence
        << "; consider lowering the thresholds";
    raise(ErrorCode::NoRulesFound, oss.str());
  }

  std::vector<VariableDef> inputs;
  inputs.reserve(antecedent_partitions.size());
  for (const auto& cp : antecedent_partitions) {
    inputs.push_back(
        {cp.column, cp.partition.front().universe(), cp.partition});
  }
  VariableDef output{consequent_partition.column,
                     consequent_partition.partition.front().universe(),
                     consequent_partition.partition};

  std::vector<FuzzyRule> rules;
  rules.reserve(mined.size());
  for (const auto& m : mined) {
    FuzzyRule rule;
    for (std::size_t k = 0; k < antecedent_partitions.size(); ++k) {
      rule.antecedent.emplace_back(
          antecedent_partitions[k].column,
          antecedent_partitions[k].partition[m.antecedent_labels[k]].label());
    }
    rule.connective = Connective::And;
    rule.consequent = {consequent_partition.column,
                       consequent_partition.partition[m.consequent_label]
                           .label()};
    rule.probability = 1.0;
    rules.push_back(std::move(rule));
  }
  return RuleBase(std::move(inputs), std::move(output), std::move(rules),
                  output_grid_points, policy);
}

}  // namespace fuzzycausal
