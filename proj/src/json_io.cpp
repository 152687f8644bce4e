#include "fuzzycausal/json_io.hpp"

#include <fstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

using nlohmann::json;

nlohmann::json universe_to_json(const Universe& universe) {
  json j;
  if (universe.is_continuous()) {
    j["a"] = universe.lower();
    j["b"] = universe.upper();
    j["grid_points"] = universe.size();
  } else {
    j["values"] = universe.points();
  }
  return j;
}

Universe universe_from_json(const json& j) {
  if (j.contains("values")) {
    return Universe::discrete(j.at("values").get<std::vector<double>>());
  }
  const std::size_t grid =
      j.value("grid_points", Universe::kDefaultGridPoints);
  return Universe::continuous(j.at("a").get<double>(), j.at("b").get<double>(),
                              grid);
}

nlohmann::json attribute_to_json(const FuzzyAttribute& attr) {
  json shape;
  const auto& mf = attr.mu();
  switch (mf.kind()) {
    case MembershipFunction::Kind::Triangular:
      shape["kind"] = "triangular";
      shape["left"] = mf.params()[0];
      shape["peak"] = mf.params()[1];
      shape["right"] = mf.params()[2];
      break;
    case MembershipFunction::Kind::Trapezoidal:
      shape["kind"] = "trapezoidal";
      shape["left"] = mf.params()[0];
      shape["peak_left"] = mf.params()[1];
      shape["peak_right"] = mf.params()[2];
      shape["right"] = mf.params()[3];
      break;
    case MembershipFunction::Kind::Gaussian:
      shape["kind"] = "gaussian";
      shape["mean"] = mf.params()[0];
      shape["sigma"] = mf.params()[1];
      break;
    case MembershipFunction::Kind::PiecewiseLinear: {
      shape["kind"] = "piecewise-linear";
      json points = json::array();
      for (const auto& [x, y] : mf.vertices()) {
        points.push_back(json::array({x, y}));
      }
      shape["points"] = std::move(points);
      break;
    }
    case MembershipFunction::Kind::CrispIndicator:
      shape["kind"] = "crisp-indicator";
      shape["subset"] = mf.params();
      break;
  }
  if (mf.kind() != MembershipFunction::Kind::PiecewiseLinear &&
      mf.height() != 1.0) {
    shape["height"] = mf.height();
  }
  json j;
  j["label"] = attr.label();
  j["universe"] = universe_to_json(attr.universe());
  j["shape"] = std::move(shape);
  return j;
}

FuzzyAttribute attribute_from_json(const json& j) {
  const std::string label = j.at("label").get<std::string>();
  Universe universe = universe_from_json(j.at("universe"));
  const json& shape = j.at("shape");
  const std::string kind = shape.at("kind").get<std::string>();
  const double height = shape.value("height", 1.0);

  if (kind == "triangular") {
    return FuzzyAttribute(
        label, std::move(universe),
        MembershipFunction::triangular(shape.at("left").get<double>(),
                                       shape.at("peak").get<double>(),
                                       shape.at("right").get<double>(),
                                       height));
  }
  if (kind == "trapezoidal") {
    return FuzzyAttribute(
        label, std::move(universe),
        MembershipFunction::trapezoidal(shape.at("left").get<double>(),
                                        shape.at("peak_left").get<double>(),
                                        shape.at("peak_right").get<double>(),
                                        shape.at("right").get<double>(),
                                        height));
  }
  if (kind == "gaussian") {
    return FuzzyAttribute(
        label, std::move(universe),
        MembershipFunction::gaussian(shape.at("mean").get<double>(),
                                     shape.at("sigma").get<double>(),
                                     height));
  }
  if (kind == "piecewise-linear") {
    std::vector<std::pair<double, double>> points;
    for (const auto& p : shape.at("points")) {
      points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    }
    return FuzzyAttribute(label, std::move(universe),
                          MembershipFunction::piecewise_linear(points));
  }
  if (kind == "crisp-indicator") {
    return FuzzyAttribute(
        label, std::move(universe),
        MembershipFunction::crisp_indicator(
            shape.at("subset").get<std::vector<double>>(), height));
  }
  raise(ErrorCode::InvalidArgument, "unknown membership kind '" + kind + "'");
}

nlohmann::json scm_to_json(const ScmSpec& scm) {
  json vars = json::array();
  for (const auto& v : scm.variables()) {
    json jv;
    jv["name"] = v.name;
    json noise;
    if (v.noise.kind == NoiseSpec::Kind::Normal) {
      noise["kind"] = "normal";
      noise["mean"] = v.noise.mean;
      noise["std"] = v.noise.stddev;
    } else {
      noise["kind"] = "none";
    }
    jv["noise"] = std::move(noise);
    jv["expr"] = v.expr_text;
    vars.push_back(std::move(jv));
  }
  json j;
  j["variables"] = std::move(vars);
  j["treatment"] = scm.treatment();
  j["outcome"] = scm.outcome();
  return j;
}

ScmSpec scm_from_json(const json& j) {
  std::vector<ScmVariable> vars;
  for (const auto& jv : j.at("variables")) {
    ScmVariable v;
    v.name = jv.at("name").get<std::string>();
    if (jv.contains("noise")) {
      const auto& noise = jv.at("noise");
      const std::string kind = noise.value("kind", "none");
      if (kind == "normal") {
        v.noise = NoiseSpec::normal(noise.value("mean", 0.0),
                                    noise.value("std", 0.0));
      } else if (kind != "none") {
        raise(ErrorCode::InvalidArgument,
              "unknown noise kind '" + kind + "'");
      }
    }
    v.expr_text = jv.value("expr", "");
    vars.push_back(std::move(v));
  }
  return ScmSpec(std::move(vars), j.at("treatment").get<std::string>(),
                 j.at("outcome").get<std::string>());
}

namespace {

json variable_def_to_json(const VariableDef& def) {
  json j;
  j["name"] = def.name;
  j["universe"] = universe_to_json(def.universe);
  json partition = json::array();
  for (const auto& attr : def.partition) {
    partition.push_back(attribute_to_json(attr));
  }
  j["partition"] = std::move(partition);
  return j;
}

VariableDef variable_def_from_json(const json& j) {
  VariableDef def{j.at("name").get<std::string>(),
                  universe_from_json(j.at("universe")),
                  {}};
  for (const auto& ja : j.at("partition")) {
    def.partition.push_back(attribute_from_json(ja));
  }
  return def;
}

}  // namespace

nlohmann::json rulebase_to_json(const RuleBase& base) {
  json j;
  json inputs = json::array();
  for (const auto& in : base.inputs()) {
    inputs.push_back(variable_def_to_json(in));
  }
  j["inputs"] = std::move(inputs);
  json out = variable_def_to_json(base.output());
  out["grid_points"] = base.output_grid_points();
  j["output"] = std::move(out);
  json rules = json::array();
  for (const auto& rule : base.rules()) {
    json jr;
    json clauses = json::array();
    for (const auto& [var, lab] : rule.antecedent) {
      clauses.push_back(json::array({var, lab}));
    }
    jr["if"] = std::move(clauses);
    jr["connective"] = rule.connective == Connective::And ? "and" : "or";
    jr["then"] = json::array({rule.consequent.first, rule.consequent.second});
    jr["prob"] = rule.probability;
    rules.push_back(std::move(jr));
  }
  j["rules"] = std::move(rules);
  return j;
}

RuleBase rulebase_from_json(const json& j) {
  std::vector<VariableDef> inputs;
  for (const auto& ji : j.at("inputs")) {
    inputs.push_back(variable_def_from_json(ji));
  }
  VariableDef output = variable_def_from_json(j.at("output"));
  const std::size_t grid_points = j.at("output").value("grid_points", 1001);
  std::vector<FuzzyRule> rules;
  for (const auto& jr : j.at("rules")) {
    FuzzyRule rule;
    for (const auto& clause : jr.at("if")) {
      rule.antecedent.emplace_back(clause.at(0).get<std::string>(),
                                   clause.at(1).get<std::string>());
    }
    const std::string conn = jr.value("connective", "and");
    if (conn == "and") {
      rule.connective = Connective::And;
    } else if (conn == "or") {
      rule.connective = Connective::Or;
    } else {
      raise(ErrorCode::InvalidArgument,
            "unknown connective '" + conn + "'");
    }
    rule.consequent = {jr.at("then").at(0).get<std::string>(),
                       jr.at("then").at(1).get<std::string>()};
    rule.probability = jr.value("prob", 1.0);
    rules.push_back(std::move(rule));
  }
  return RuleBase(std::move(inputs), std::move(output), std::move(rules),
                  grid_points);
}

nlohmann::json effect_report_to_json(const EffectReport& report) {
  json j;
  j["estimator"] = report.estimator;
  j["value"] = report.value;
  if (report.denominator.has_value()) {
    j["denominator"] = *report.denominator;
  } else {
    j["denominator"] = nullptr;
  }
  json diag;
  diag["grid_size"] = report.diagnostics.grid_size;
  diag["n_mc"] = report.diagnostics.n_mc;
  diag["max_se"] = report.diagnostics.max_se;
  diag["curve_provenance"] = report.diagnostics.curve_provenance;
  diag["inputs"] = report.inputs_summary;
  j["diagnostics"] = std::move(diag);
  j["assumptions"] = report.assumptions;
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::IoError, "cannot parse '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << '\n';
  if (!out) {
    raise(ErrorCode::IoError, "failed writing '" + path + "'");
  }
}

}  // namespace fuzzycausal
