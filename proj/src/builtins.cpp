#include "fuzzycausal/builtins.hpp"

#include <cmath>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {
namespace builtins {

ScmSpec sodium_scm() {
  std::vector<ScmVariable> vars;
  vars.push_back({"age", NoiseSpec::normal(65.0, 5.0), ""});
  vars.push_back({"sodium", NoiseSpec::normal(0.0, 1.0), "age / 18"});
  vars.push_back({"bloodpressure", NoiseSpec::normal(0.0, 1.0),
                  "1.05 * sodium + 2 * age"});
  vars.push_back({"proteinuria", NoiseSpec::normal(0.0, 1.0),
                  "0.4 * sodium + 0.3 * bloodpressure"});
  return ScmSpec(std::move(vars), "sodium", "bloodpressure");
}

AttributePair fig1a_pair(const Universe& universe) {
  const double a = universe.lower();
  const double b = universe.upper();
  const double mid = a + (b - a) / 2.0;
  return AttributePair(
      FuzzyAttribute("low", universe,
                     MembershipFunction::triangular(a, a, mid)),
      FuzzyAttribute("high", universe,
                     MembershipFunction::triangular(mid, b, b)));
}

AttributePair fig1b_pair(const Universe& universe, double m) {
  const double a = universe.lower();
  const double b = universe.upper();
  if (!(m > 0.0) || !(m < b - a)) {
    raise(ErrorCode::InvalidArgument,
          "fig1b zero offset m must lie in (0, b-a)");
  }
  return AttributePair(
      FuzzyAttribute("low", universe,
                     MembershipFunction::triangular(a, a, a + m)),
      FuzzyAttribute("high", universe,
                     MembershipFunction::triangular(b - m, b, b)));
}

AttributePair fig1c_pair(const Universe& universe) {
  const double a = universe.lower();
  const double b = universe.upper();
  const double len = b - a;
  return AttributePair(
      FuzzyAttribute("low", universe,
                     MembershipFunction::trapezoidal(a, a, a + len / 4.0,
                                                     a + len / 2.0)),
      FuzzyAttribute("high", universe,
                     MembershipFunction::trapezoidal(a + len / 2.0,
                                                     a + 3.0 * len / 4.0, b,
                                                     b)));
}

AttributePair fig1d_pair(const Universe& universe) {
  const double a = universe.lower();
  const double b = universe.upper();
  const double sigma = (b - a) / 4.0;
  return AttributePair(
      FuzzyAttribute("low", universe, MembershipFunction::gaussian(a, sigma)),
      FuzzyAttribute("high", universe,
                     MembershipFunction::gaussian(b, sigma)));
}

AttributePair named_pair(const std::string& name, const Universe& universe) {
  if (name == "fig1a") return fig1a_pair(universe);
  if (name == "fig1b") {
    return fig1b_pair(universe, 0.6 * (universe.upper() - universe.lower()));
  }
  if (name == "fig1c") return fig1c_pair(universe);
  if (name == "fig1d") return fig1d_pair(universe);
  raise(ErrorCode::InvalidArgument,
        "unknown pair name '" + name + "' (expected fig1a..fig1d)");
}

std::vector<FuzzyAttribute> three_term_partition(const Universe& universe,
                                                 const std::string& low_label,
                                                 const std::string& mid_label,
                                                 const std::string&
                                                     high_label) {
  return make_partition(universe, 3, PartitionFamily::Triangular,
                        {low_label, mid_label, high_label});
}

namespace {

RuleBase make_tipping_base(bool probabilistic, NoFirePolicy policy) {
  const Universe in_univ = Universe::continuous(0.0, 10.0);
  const Universe out_univ = Universe::continuous(0.0, 25.0);

  VariableDef quality{"quality", in_univ,
                      three_term_partition(in_univ, "poor", "average",
                                           "good")};
  VariableDef service{"service", in_univ,
                      three_term_partition(in_univ, "poor", "average",
                                           "good")};
  VariableDef tip{"tip", out_univ,
                  three_term_partition(out_univ, "low", "medium", "high")};

  using Clause = std::pair<std::string, std::string>;
  const std::vector<Clause> ant1{{"quality", "poor"}, {"service", "poor"}};
  const std::vector<Clause> ant2{{"service", "average"}};
  const std::vector<Clause> ant3{{"quality", "good"}, {"service", "good"}};

  std::vector<FuzzyRule> rules;
  if (!probabilistic) {
    rules.push_back({ant1, Connective::Or, {"tip", "low"}, 1.0});
    rules.push_back({ant2, Connective::And, {"tip", "medium"}, 1.0});
    rules.push_back({ant3, Connective::Or, {"tip", "high"}, 1.0});
  } else {
    rules.push_back({ant1, Connective::Or, {"tip", "low"}, 0.7});
    rules.push_back({ant1, Connective::Or, {"tip", "medium"}, 0.3});
    rules.push_back({ant2, Connective::And, {"tip", "medium"}, 0.7});
    rules.push_back({ant2, Connective::And, {"tip", "high"}, 0.3});
    rules.push_back({ant3, Connective::Or, {"tip", "high"}, 0.7});
    rules.push_back({ant3, Connective::Or, {"tip", "medium"}, 0.3});
  }
  return RuleBase({quality, service}, tip, std::move(rules), 1001, policy);
}

}  // namespace

RuleBase tipping_rulebase(NoFirePolicy policy) {
  return make_tipping_base(false, policy);
}

RuleBase tipping_prob_rulebase(NoFirePolicy policy) {
  return make_tipping_base(true, policy);
}

UnivariateDistribution tipping_service_dist(double scale) {
  return UnivariateDistribution::truncated_normal(
      Universe::continuous(0.0, 10.0), 7.0, scale);
}

UnivariateDistribution tipping_quality_dist(double scale) {
  return UnivariateDistribution::truncated_normal(
      Universe::continuous(0.0, 10.0), 5.0, scale);
}

}  // namespace builtins
}  // namespace fuzzycausal
