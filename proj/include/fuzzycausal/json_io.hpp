#pragma once

#include <string>

#include <json.hpp>

#include "fuzzycausal/attribute.hpp"
#include "fuzzycausal/effects.hpp"
#include "fuzzycausal/mamdani.hpp"
#include "fuzzycausal/scm.hpp"

namespace fuzzycausal {

/// JSON field names are part of the file contract:
///   attribute: {"label", "universe": {"a","b"[,"grid_points"]} |
///               {"values":[...]}, "shape": {"kind", ...}}
///   scm:       {"variables":[{"name","noise":{"kind","mean","std"},"expr"}],
///               "treatment","outcome"}
///   rulebase:  {"inputs":[{"name","universe","partition":[...]}],
///               "output":{..., "grid_points"},
///               "rules":[{"if":[["var","label"]...],"connective","then",
///                         "prob"}]}

nlohmann::json universe_to_json(const Universe& universe);
Universe universe_from_json(const nlohmann::json& j);

nlohmann::json attribute_to_json(const FuzzyAttribute& attr);
FuzzyAttribute attribute_from_json(const nlohmann::json& j);

nlohmann::json scm_to_json(const ScmSpec& scm);
ScmSpec scm_from_json(const nlohmann::json& j);

nlohmann::json rulebase_to_json(const RuleBase& base);
RuleBase rulebase_from_json(const nlohmann::json& j);

nlohmann::json effect_report_to_json(const EffectReport& report);

/// Parses a JSON document from a file; throws IoError with the path on
/// failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace fuzzycausal
