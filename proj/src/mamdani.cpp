#include "fuzzycausal/mamdani.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

namespace {

constexpr double kFireTol = 1e-12;
// Strengths and membership values below this cannot change any defuzzified
// result at double precision; aggregation skips them.
constexpr double kNegligible = 1e-15;

std::string group_key(const FuzzyRule& rule) {
  std::ostringstream oss;
  oss << (rule.connective == Connective::And ? "&" : "|");
  for (const auto& [var, label] : rule.antecedent) {
    oss << ';' << var << '=' << label;
  }
  return oss.str();
}

}  // namespace

Defuzzifier defuzzifier_from_name(const std::string& name) {
  if (name == "centroid") return Defuzzifier::Centroid;
  if (name == "bisector") return Defuzzifier::Bisector;
  if (name == "mom") return Defuzzifier::MeanOfMax;
  if (name == "som") return Defuzzifier::SmallestOfMax;
  if (name == "lom") return Defuzzifier::LargestOfMax;
  raise(ErrorCode::InvalidArgument,
        "unknown defuzzifier '" + name +
            "' (expected centroid|bisector|mom|som|lom)");
}

const char* defuzzifier_name(Defuzzifier method) {
  switch (method) {
    case Defuzzifier::Centroid: return "centroid";
    case Defuzzifier::Bisector: return "bisector";
    case Defuzzifier::MeanOfMax: return "mom";
    case Defuzzifier::SmallestOfMax: return "som";
    case Defuzzifier::LargestOfMax: return "lom";
  }
  return "unknown";
}

RuleBase::RuleBase(std::vector<VariableDef> inputs, VariableDef output,
                   std::vector<FuzzyRule> rules,
                   std::size_t output_grid_points, NoFirePolicy policy)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      policy_(policy) {
  if (inputs_.empty()) {
    raise(ErrorCode::InvalidRuleBase, "rule base needs at least one input");
  }
  if (rules_.empty()) {
    raise(ErrorCode::InvalidRuleBase, "rule base needs at least one rule");
  }
  if (output_grid_points < 101) {
    raise(ErrorCode::InvalidRuleBase, "output grid needs >= 101 points");
  }
  if (!output_.universe.is_continuous()) {
    raise(ErrorCode::InvalidRuleBase, "output universe must be continuous");
  }
  out_grid_ = linspace(output_.universe.lower(), output_.universe.upper(),
                       output_grid_points);

  input_offsets_.resize(inputs_.size(), 0);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    input_offsets_[i] = offset;
    offset += inputs_[i].partition.size();
  }

  auto find_input = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      if (inputs_[i].name == name) return i;
    }
    raise(ErrorCode::UnknownVariable, "unknown input variable '" + name + "'");
  };
  auto find_attr = [&](const VariableDef& var,
                       const std::string& label) -> std::size_t {
    for (std::size_t i = 0; i < var.partition.size(); ++i) {
      if (var.partition[i].label() == label) return i;
    }
    raise(ErrorCode::UnknownLabel,
          "variable '" + var.name + "' has no attribute '" + label + "'");
  };

  rule_clauses_.reserve(rules_.size());
  rule_consequent_.reserve(rules_.size());
  consequent_mu_.reserve(rules_.size());
  for (const auto& rule : rules_) {
    if (rule.antecedent.empty()) {
      raise(ErrorCode::InvalidRuleBase, "rule antecedent is empty");
    }
    if (!(rule.probability > 0.0) || rule.probability > 1.0) {
      raise(ErrorCode::InvalidRuleBase,
            "rule probability must lie in (0, 1]");
    }
    std::vector<ClauseRef> clauses;
    clauses.reserve(rule.antecedent.size());
    for (const auto& [var, label] : rule.antecedent) {
      const std::size_t vi = find_input(var);
      clauses.push_back({vi, find_attr(inputs_[vi], label)});
    }
    rule_clauses_.push_back(std::move(clauses));
    if (rule.consequent.first != output_.name) {
      raise(ErrorCode::UnknownVariable,
            "rule consequent variable '" + rule.consequent.first +
                "' is not the output");
    }
    const std::size_t ci = find_attr(output_, rule.consequent.second);
    rule_consequent_.push_back(ci);
    std::vector<double> mu;
    mu.reserve(out_grid_.size());
    for (double y : out_grid_) {
      mu.push_back(output_.partition[ci].mu().evaluate(y));
    }
    // Grid span where the consequent can contribute at all; values below
    // kNegligible cannot change any aggregate.
    std::size_t begin = mu.size();
    std::size_t end = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (mu[j] >= kNegligible) {
        begin = std::min(begin, j);
        end = j + 1;
      }
    }
    consequent_span_.emplace_back(begin, end);
    consequent_mu_.push_back(std::move(mu));
  }

  // Group rules by identical antecedent; probabilities per group must be a
  // distribution.
  std::map<std::string, std::size_t> key_to_group;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const std::string key = group_key(rules_[r]);
    auto [it, inserted] = key_to_group.emplace(key, groups_.size());
    if (inserted) groups_.emplace_back();
    groups_[it->second].push_back(r);
  }
  for (const auto& group : groups_) {
    double total = 0.0;
    for (std::size_t r : group) total += rules_[r].probability;
    if (std::abs(total - 1.0) > 1e-9) {
      std::ostringstream oss;
      oss << "rule-group probabilities sum to " << total << ", expected 1";
      raise(ErrorCode::InvalidRuleBase, oss.str());
    }
  }
}

const VariableDef& RuleBase::input(const std::string& name) const {
  for (const auto& v : inputs_) {
    if (v.name == name) return v;
  }
  raise(ErrorCode::UnknownVariable, "unknown input variable '" + name + "'");
}

const FuzzyAttribute& RuleBase::attribute(const std::string& variable,
                                          const std::string& label) const {
  const VariableDef* def = nullptr;
  if (variable == output_.name) {
    def = &output_;
  } else {
    def = &input(variable);
  }
  for (const auto& attr : def->partition) {
    if (attr.label() == label) return attr;
  }
  raise(ErrorCode::UnknownLabel,
        "variable '" + variable + "' has no attribute '" + label + "'");
}

std::vector<double> RuleBase::clause_degrees(
    const std::map<std::string, double>& inputs) const {
  // Degrees indexed by (input, attribute), flattened.
  std::vector<double> degrees;
  std::size_t total = 0;
  for (const auto& v : inputs_) total += v.partition.size();
  degrees.reserve(total);
  for (const auto& v : inputs_) {
    auto it = inputs.find(v.name);
    if (it == inputs.end()) {
      raise(ErrorCode::UnknownVariable,
            "no input value supplied for variable '" + v.name + "'");
    }
    for (const auto& attr : v.partition) {
      degrees.push_back(attr.evaluate(it->second));
    }
  }
  return degrees;
}

double RuleBase::strength_from_degrees(
    std::size_t rule_idx, const std::vector<double>& degrees) const {
  const auto& clauses = rule_clauses_[rule_idx];
  const bool is_and = rules_[rule_idx].connective == Connective::And;
  double s = is_and ? 1.0 : 0.0;
  for (const auto& c : clauses) {
    const double d = degrees[input_offsets_[c.input] + c.attribute];
    s = is_and ? std::min(s, d) : std::max(s, d);
  }
  return s;
}

double RuleBase::rule_strength(
    const FuzzyRule& rule, const std::map<std::string, double>& inputs) const {
  const bool is_and = rule.connective == Connective::And;
  double s = is_and ? 1.0 : 0.0;
  for (const auto& [var, label] : rule.antecedent) {
    auto it = inputs.find(var);
    if (it == inputs.end()) {
      raise(ErrorCode::UnknownVariable,
            "no input value supplied for variable '" + var + "'");
    }
    const double d = attribute(var, label).evaluate(it->second);
    s = is_and ? std::min(s, d) : std::max(s, d);
  }
  return s;
}

AggregatedOutput RuleBase::aggregate(
    const std::map<std::string, double>& inputs,
    const std::vector<std::size_t>* rule_subset) const {
  const auto degrees = clause_degrees(inputs);
  std::vector<std::size_t> all;
  if (rule_subset == nullptr) {
    all.resize(rules_.size());
    for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
    rule_subset = &all;
  }
  AggregatedOutput out;
  out.grid = out_grid_;
  out.membership.assign(out_grid_.size(), 0.0);
  for (std::size_t r : *rule_subset) {
    const double s = strength_from_degrees(r, degrees);
    if (s < kNegligible) continue;
    const auto& mu = consequent_mu_[r];
    const auto [begin, end] = consequent_span_[r];
    for (std::size_t j = begin; j < end; ++j) {
      out.membership[j] = std::max(out.membership[j], std::min(s, mu[j]));
    }
  }
  return out;
}

double RuleBase::defuzz_or_policy(const AggregatedOutput& agg,
                                  double max_strength,
                                  Defuzzifier method) const {
  if (max_strength <= kFireTol) {
    if (policy_ == NoFirePolicy::Error) {
      raise(ErrorCode::NoRuleFired,
            "no rule fired above tolerance for the given inputs");
    }
    return output_.universe.lower() +
           (output_.universe.upper() - output_.universe.lower()) / 2.0;
  }
  return defuzzify(agg, method);
}

double RuleBase::infer(const std::map<std::string, double>& inputs,
                       Defuzzifier method) const {
  const auto degrees = clause_degrees(inputs);
  double max_strength = 0.0;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    max_strength = std::max(max_strength, strength_from_degrees(r, degrees));
  }
  const auto agg = aggregate(inputs, nullptr);
  return defuzz_or_policy(agg, max_strength, method);
}

double RuleBase::prob_infer_expectation(
    const std::map<std::string, double>& inputs, Defuzzifier method) const {
  std::size_t n_configs = 1;
  for (const auto& group : groups_) {
    if (n_configs > 4096 / group.size()) {
      raise(ErrorCode::TooManyConfigurations,
            "rule-configuration count exceeds 4096");
    }
    n_configs *= group.size();
  }

  const auto degrees = clause_degrees(inputs);
  std::vector<double> strengths(rules_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    strengths[r] = strength_from_degrees(r, degrees);
  }

  std::vector<std::size_t> choice(groups_.size(), 0);
  std::vector<std::size_t> selected(groups_.size());
  double acc = 0.0;
  for (std::size_t c = 0; c < n_configs; ++c) {
    double weight = 1.0;
    double max_strength = 0.0;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const std::size_t r = groups_[g][choice[g]];
      selected[g] = r;
      weight *= rules_[r].probability;
      max_strength = std::max(max_strength, strengths[r]);
    }
    const auto agg = aggregate(inputs, &selected);
    acc += weight * defuzz_or_policy(agg, max_strength, method);

    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (++choice[g] < groups_[g].size()) break;
      choice[g] = 0;
    }
  }
  return acc;
}

double defuzzify(const AggregatedOutput& agg, Defuzzifier method) {
  const auto& y = agg.grid;
  const auto& mu = agg.membership;
  double total = 0.0;
  double peak = 0.0;
  for (double v : mu) {
    total += v;
    peak = std::max(peak, v);
  }
  if (total <= 0.0) {
    raise(ErrorCode::NoRuleFired, "aggregated output is identically zero");
  }
  switch (method) {
    case Defuzzifier::Centroid: {
      double num = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) num += y[j] * mu[j];
      return num / total;
    }
    case Defuzzifier::Bisector: {
      double acc = 0.0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        acc += mu[j];
        if (acc >= total / 2.0) return y[j];
      }
      return y.back();
    }
    case Defuzzifier::MeanOfMax:
    case Defuzzifier::SmallestOfMax:
    case Defuzzifier::LargestOfMax: {
      double sum = 0.0;
      std::size_t count = 0;
      double smallest = y.back();
      double largest = y.front();
      bool first = true;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (mu[j] >= peak - 1e-12) {
          sum += y[j];
          ++count;
          if (first) {
            smallest = y[j];
            first = false;
          }
          largest = y[j];
        }
      }
      if (method == Defuzzifier::SmallestOfMax) return smallest;
      if (method == Defuzzifier::LargestOfMax) return largest;
      return sum / static_cast<double>(count);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown defuzzifier");
}

OutcomeCurve outcome_curve_via_rules(const RuleBase& base,
                                     const std::string& treatment,
                                     const UnivariateDistribution& confounder,
                                     const std::vector<double>& t_grid,
                                     std::size_t n_mc, RandomSource rng,
                                     Defuzzifier method, bool probabilistic) {
  if (base.inputs().size() != 2) {
    raise(ErrorCode::InvalidRuleBase,
          "outcome_curve_via_rules expects exactly treatment + one "
          "confounder input");
  }
  const std::string& other = base.inputs()[0].name == treatment
                                 ? base.inputs()[1].name
                                 : base.inputs()[0].name;
  base.input(treatment);  // throws if missing
  if (n_mc < 1) {
    raise(ErrorCode::InvalidArgument, "n_mc must be at least 1");
  }

  RandomSource local = rng.substream(0);
  const std::vector<double> draws = confounder.sample(n_mc, local);

  std::vector<double> means(t_grid.size(), 0.0);
  std::vector<double> ses(t_grid.size(), 0.0);
  std::map<std::string, double> in;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    double sum = 0.0;
    double sumsq = 0.0;
    for (double c : draws) {
      in[treatment] = t_grid[k];
      in[other] = c;
      const double v = probabilistic
                           ? base.prob_infer_expectation(in, method)
                           : base.infer(in, method);
      sum += v;
      sumsq += v * v;
    }
    const double m = sum / static_cast<double>(n_mc);
    means[k] = m;
    if (n_mc > 1) {
      const double var =
          std::max(0.0, (sumsq - static_cast<double>(n_mc) * m * m) /
                            static_cast<double>(n_mc - 1));
      ses[k] = std::sqrt(var / static_cast<double>(n_mc));
    }
  }
  return OutcomeCurve(t_grid, std::move(means), std::move(ses),
                      CurveProvenance::FuzzySystem);
}

LabeledDataset fuzzify_dataset(
    const Dataset& data, const std::vector<ColumnPartition>& partitions) {
  LabeledDataset out;
  for (const auto& cp : partitions) {
    const auto& col = data.column(cp.column);
    std::vector<std::size_t> labels;
    labels.reserve(col.size());
    for (double v : col) {
      std::size_t best = 0;
      double best_degree = -1.0;
      for (std::size_t i = 0; i < cp.partition.size(); ++i) {
        const double d = cp.partition[i].evaluate(v);
        if (d > best_degree) {  // ties keep the lowest index
          best_degree = d;
          best = i;
        }
      }
      labels.push_back(best);
    }
    out.names.push_back(cp.column);
    out.columns.push_back(std::move(labels));
  }
  return out;
}

}  // namespace fuzzycausal
