// fuzzycausal: fuzzy causal-effect estimation on SCMs, datasets, and
// Mamdani rule bases.
//
// Exit codes: 0 success, 2 usage error, 3 domain error (degenerate inputs,
// no rules found, ...), 4 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "fuzzycausal/apriori.hpp"
#include "fuzzycausal/builtins.hpp"
#include "fuzzycausal/config.hpp"
#include "fuzzycausal/csv.hpp"
#include "fuzzycausal/effects.hpp"
#include "fuzzycausal/errors.hpp"
#include "fuzzycausal/json_io.hpp"
#include "fuzzycausal/metrics.hpp"
#include "fuzzycausal/regression.hpp"
#include "fuzzycausal/scm.hpp"

namespace fc = fuzzycausal;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct CommandFlags {
  fc::RunConfig cfg;
  std::string config_path;
  std::string estimators_csv;
  std::string defuzz_csv;

  void finalize() {
    if (!estimators_csv.empty()) cfg.estimators = fc::split_list(estimators_csv);
    if (!defuzz_csv.empty()) cfg.defuzzifiers = fc::split_list(defuzz_csv);
    if (!config_path.empty()) cfg.merge_file(fc::load_json_file(config_path));
    cfg.apply_env(std::getenv("FUZZY_CAUSAL_SEED"));
    cfg.validate();
  }
};

void add_common_flags(CLI::App* cmd, CommandFlags& f) {
  cmd->add_option("--builtin", f.cfg.builtin,
                  "Built-in experiment name (sodium, tipping, tipping-prob)");
  cmd->add_option("--scm", f.cfg.scm_path, "SCM spec JSON path");
  cmd->add_option("--data", f.cfg.data_path, "Dataset CSV path");
  cmd->add_option("--pair", f.cfg.pair,
                  "Attribute pair: fig1a..fig1d or a JSON path");
  cmd->add_option("--estimators", f.estimators_csv,
                  "Comma list: ate,fate,nfate,gfate,ngfate");
  cmd->add_option("--defuzz", f.defuzz_csv,
                  "Comma list: centroid,bisector,mom,som,lom");
  cmd->add_option("--n", f.cfg.n, "Dataset size");
  cmd->add_option("--n-mc", f.cfg.n_mc, "Monte Carlo draws per grid point");
  cmd->add_option("--grid", f.cfg.grid, "Treatment grid points");
  cmd->add_option("--seed", f.cfg.seed, "Random seed");
  cmd->add_option("--support", f.cfg.support, "Apriori minimum support");
  cmd->add_option("--confidence", f.cfg.confidence,
                  "Apriori minimum confidence");
  cmd->add_option("--out", f.cfg.out_path, "Output path");
  cmd->add_option("--config", f.config_path, "JSON config file (flags win)");
}

fc::ScmSpec resolve_scm(const fc::RunConfig& cfg) {
  if (cfg.scm_path.has_value()) {
    return fc::scm_from_json(fc::load_json_file(*cfg.scm_path));
  }
  const std::string name = cfg.builtin.value_or("sodium");
  if (name == "sodium") return fc::builtins::sodium_scm();
  fc::raise(fc::ErrorCode::InvalidArgument,
            "no SCM for builtin '" + name + "' (expected sodium)");
}

std::pair<double, double> column_range(const fc::Dataset& data,
                                       const std::string& column) {
  const auto& col = data.column(column);
  const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
  if (!(*mn < *mx)) {
    fc::raise(fc::ErrorCode::DegenerateAttribute,
              "column '" + column + "' is constant");
  }
  return {*mn, *mx};
}

fc::AttributePair resolve_pair(const fc::RunConfig& cfg,
                               const fc::Universe& universe) {
  if (!cfg.pair.has_value()) {
    fc::raise(fc::ErrorCode::InvalidArgument,
              "an attribute pair is required (--pair fig1a..fig1d or PATH)");
  }
  const std::string& spec = *cfg.pair;
  if (spec.rfind("fig1", 0) == 0) {
    return fc::builtins::named_pair(spec, universe);
  }
  const auto j = fc::load_json_file(spec);
  return fc::AttributePair(fc::attribute_from_json(j.at("a")),
                           fc::attribute_from_json(j.at("b")));
}

std::vector<fc::Defuzzifier> resolve_defuzzifiers(const fc::RunConfig& cfg) {
  std::vector<fc::Defuzzifier> out;
  if (cfg.defuzzifiers.empty()) {
    out = {fc::Defuzzifier::Centroid, fc::Defuzzifier::Bisector,
           fc::Defuzzifier::LargestOfMax, fc::Defuzzifier::MeanOfMax,
           fc::Defuzzifier::SmallestOfMax};
  } else {
    for (const auto& name : cfg.defuzzifiers) {
      out.push_back(fc::defuzzifier_from_name(name));
    }
  }
  return out;
}

void emit_table(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows,
                const std::optional<std::string>& out_path) {
  std::cout << fc::table_to_text(header, rows);
  if (out_path.has_value()) {
    fc::write_file_atomic(*out_path, fc::table_to_csv(header, rows));
    std::cout << "wrote " << *out_path << "\n";
  }
}

std::string fmt(double v) {
  std::ostringstream oss;
  oss.precision(6);
  oss << v;
  return oss.str();
}

// ---------------------------------------------------------------------------

int cmd_generate(const fc::RunConfig& cfg) {
  const auto scm = resolve_scm(cfg);
  const std::size_t n = cfg.n_or(10000);
  const auto data = fc::generate_dataset(scm, n, fc::RandomSource(
                                                    cfg.seed_or_default()));
  const std::string out = cfg.out_path.value_or("dataset.csv");
  fc::write_dataset_csv(out, data);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t c = 0; c < data.n_cols(); ++c) {
    double mean = 0.0;
    for (double v : data.column(c)) mean += v;
    mean /= static_cast<double>(data.n_rows());
    rows.push_back({data.names()[c], fmt(mean)});
  }
  emit_table({"column", "mean"}, rows, std::nullopt);
  std::cout << "wrote " << out << " (" << data.n_rows() << " rows)\n";
  return 0;
}

int cmd_effects(const fc::RunConfig& cfg) {
  const bool have_scm = cfg.scm_path.has_value() || !cfg.data_path.has_value();
  std::optional<fc::ScmSpec> scm;
  if (have_scm) scm = resolve_scm(cfg);

  fc::Dataset data = cfg.data_path.has_value()
                         ? fc::dataset_from_csv_file(*cfg.data_path)
                         : fc::generate_dataset(
                               *scm, cfg.n_or(10000),
                               fc::RandomSource(cfg.seed_or_default()));

  std::string treatment = cfg.treatment.value_or(
      scm.has_value() ? scm->treatment() : "");
  std::string outcome = cfg.outcome.value_or(
      scm.has_value() ? scm->outcome() : "");
  if (treatment.empty() || outcome.empty()) {
    fc::raise(fc::ErrorCode::InvalidArgument,
              "treatment/outcome must come from an SCM or the config file");
  }
  std::vector<std::string> covariates = cfg.covariates;
  if (covariates.empty() && scm.has_value()) {
    // Adjust for everything assigned before the treatment; descendants of
    // the treatment (mediators, colliders) stay out.
    for (const auto& v : scm->variables()) {
      if (v.name == treatment) break;
      covariates.push_back(v.name);
    }
  }

  const auto [t_min, t_max] = column_range(data, treatment);
  const fc::Universe universe = fc::Universe::continuous(t_min, t_max);
  const auto pair = resolve_pair(cfg, universe);
  // The curve also covers {0, 1} so the binary ATE contrast is readable even
  // when the observed treatment range does not include them.
  const auto t_grid = fc::linspace(std::min(t_min, 0.0), std::max(t_max, 1.0),
                                   cfg.grid_or(101));

  const auto model = fc::fit_adjustment(data, outcome, treatment, covariates);
  const auto est_curve = fc::adjusted_outcome_curve(model, data, t_grid);
  std::optional<fc::OutcomeCurve> true_curve;
  if (scm.has_value()) {
    true_curve = fc::potential_outcome_curve(
        *scm, t_grid, cfg.n_mc_or(10000),
        fc::RandomSource(cfg.seed_or_default(), 1));
  }
  const auto f_t = fc::empirical_density(data, treatment, 50);

  std::vector<std::string> estimators = cfg.estimators;
  if (estimators.empty()) {
    estimators = {"ate", "fate", "nfate", "gfate", "ngfate"};
  }

  auto evaluate = [&](const std::string& name,
                      const fc::OutcomeCurve& curve) -> fc::EffectReport {
    if (name == "ate") return fc::ate_binary(curve);
    if (name == "fate") return fc::fate(curve, pair);
    if (name == "nfate") return fc::nfate(curve, pair);
    if (name == "gfate") return fc::gfate(curve, pair, f_t);
    if (name == "ngfate") return fc::ngfate(curve, pair, f_t);
    fc::raise(fc::ErrorCode::InvalidArgument,
              "unknown estimator '" + name + "'");
  };

  std::vector<std::vector<std::string>> rows;
  for (const auto& name : estimators) {
    fc::EffectReport est;
    try {
      est = evaluate(name, est_curve);
    } catch (const fc::Error& e) {
      fc::raise(e.code(), "estimator " + name + ": " + std::string(e.what()));
    }
    std::vector<std::string> row{est.estimator, fmt(est.value)};
    if (true_curve.has_value()) {
      row.push_back(fmt(evaluate(name, *true_curve).value));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"estimator", "estimate"};
  if (true_curve.has_value()) header.push_back("oracle");
  std::cout << "treatment=" << treatment << " outcome=" << outcome
            << " pair=(" << pair.a.label() << "," << pair.b.label()
            << ") on [" << fmt(t_min) << ", " << fmt(t_max) << "]\n";
  emit_table(header, rows, cfg.out_path);
  return 0;
}

fc::RuleBase resolve_rulebase(const fc::RunConfig& cfg, bool& probabilistic) {
  const std::string name = cfg.builtin.value_or("tipping");
  probabilistic = cfg.probabilistic.value_or(name == "tipping-prob");
  if (cfg.data_path.has_value()) {
    // A rule-base JSON can be supplied through --data for the fuzzy-system
    // commands.
    return fc::rulebase_from_json(fc::load_json_file(*cfg.data_path));
  }
  if (name == "tipping") return fc::builtins::tipping_rulebase();
  if (name == "tipping-prob") return fc::builtins::tipping_prob_rulebase();
  fc::raise(fc::ErrorCode::InvalidArgument,
            "no rule base for builtin '" + name + "'");
}

void print_tipping_assumptions() {
  std::cout
      << "membership assumption: 3-term triangular partitions, peaks at "
         "{min, mid, max}, zeros at adjacent peaks\n"
      << "  quality, service on [0,10]; tip on [0,25]\n"
      << "confounder: service ~ normal(7, scale 2) truncated to [0,10]; "
         "quality marginal ~ normal(5, scale 2) for GFATE/NGFATE\n";
}

int cmd_tipping(const fc::RunConfig& cfg) {
  bool probabilistic = false;
  const auto base = resolve_rulebase(cfg, probabilistic);
  const auto service = fc::builtins::tipping_service_dist();
  const auto f_q = fc::builtins::tipping_quality_dist();
  const fc::Universe qu = base.input("quality").universe;
  const fc::AttributePair pair(base.input("quality").partition.front(),
                               base.input("quality").partition.back());
  const auto grid = fc::linspace(qu.lower(), qu.upper(), cfg.grid_or(101));
  const std::size_t n_mc = cfg.n_mc_or(2000);

  const auto methods =
      probabilistic ? std::vector<fc::Defuzzifier>{fc::Defuzzifier::Centroid}
                    : resolve_defuzzifiers(cfg);

  print_tipping_assumptions();
  if (probabilistic) {
    // Single centroid row for the probabilistic ensemble.
    const auto curve = fc::outcome_curve_via_rules(
        base, "quality", service, grid, n_mc,
        fc::RandomSource(cfg.seed_or_default()), fc::Defuzzifier::Centroid,
        true);
    emit_table({"FATE", "NFATE", "GFATE", "NGFATE"},
               {{fmt(fc::fate(curve, pair).value),
                 fmt(fc::nfate(curve, pair).value),
                 fmt(fc::gfate(curve, pair, f_q).value),
                 fmt(fc::ngfate(curve, pair, f_q).value)}},
               cfg.out_path);
    return 0;
  }

  std::vector<std::string> header{"formula"};
  for (auto m : methods) header.push_back(fc::defuzzifier_name(m));
  std::vector<std::vector<std::string>> rows(4);
  rows[0] = {"FATE"};
  rows[1] = {"NFATE"};
  rows[2] = {"GFATE"};
  rows[3] = {"NGFATE"};
  for (auto m : methods) {
    const auto curve = fc::outcome_curve_via_rules(
        base, "quality", service, grid, n_mc,
        fc::RandomSource(cfg.seed_or_default()), m, false);
    rows[0].push_back(fmt(fc::fate(curve, pair).value));
    rows[1].push_back(fmt(fc::nfate(curve, pair).value));
    rows[2].push_back(fmt(fc::gfate(curve, pair, f_q).value));
    rows[3].push_back(fmt(fc::ngfate(curve, pair, f_q).value));
  }
  emit_table(header, rows, cfg.out_path);
  return 0;
}

int cmd_surface(const fc::RunConfig& cfg) {
  bool probabilistic = false;
  const auto base = resolve_rulebase(cfg, probabilistic);
  const std::size_t lattice = cfg.grid_or(51);
  const auto methods = cfg.defuzzifiers.empty()
                           ? std::vector<fc::Defuzzifier>{
                                 fc::Defuzzifier::Centroid}
                           : resolve_defuzzifiers(cfg);

  const auto& in0 = base.inputs()[0];
  const auto& in1 = base.inputs()[1];
  const auto g0 = fc::linspace(in0.universe.lower(), in0.universe.upper(),
                               lattice);
  const auto g1 = fc::linspace(in1.universe.lower(), in1.universe.upper(),
                               lattice);

  const std::string out = cfg.out_path.value_or("surface.csv");
  for (auto m : methods) {
    std::ostringstream csv;
    csv << in0.name << ',' << in1.name << ',' << base.output().name << '\n';
    for (double a : g0) {
      for (double b : g1) {
        const std::map<std::string, double> in{{in0.name, a}, {in1.name, b}};
        const double v = probabilistic ? base.prob_infer_expectation(in, m)
                                       : base.infer(in, m);
        csv << fc::format_double(a) << ',' << fc::format_double(b) << ','
            << fc::format_double(v) << '\n';
      }
    }
    std::filesystem::path path(out);
    const std::string stem = path.stem().string();
    path.replace_filename(stem + "_" + fc::defuzzifier_name(m) +
                          path.extension().string());
    fc::write_file_atomic(path.string(), csv.str());
    std::cout << "wrote " << path.string() << " (" << lattice * lattice
              << " points)\n";
  }
  return 0;
}

int cmd_rules(const fc::RunConfig& cfg) {
  fc::Dataset data = cfg.data_path.has_value()
                         ? fc::dataset_from_csv_file(*cfg.data_path)
                         : fc::generate_dataset(
                               resolve_scm(cfg), cfg.n_or(10000),
                               fc::RandomSource(cfg.seed_or_default()));

  std::string treatment = cfg.treatment.value_or("sodium");
  std::string outcome = cfg.outcome.value_or("bloodpressure");
  std::vector<std::string> confounders = cfg.covariates;
  if (confounders.empty()) confounders = {"age"};
  if (confounders.size() != 1) {
    fc::raise(fc::ErrorCode::InvalidArgument,
              "rules expects exactly one confounder column");
  }
  const std::string confounder = confounders.front();

  const std::size_t n_sets = cfg.partitions.value_or(8);
  auto partition_for = [&](const std::string& col) {
    const auto [lo, hi] = column_range(data, col);
    return fc::ColumnPartition{
        col, fc::make_partition(fc::Universe::continuous(lo, hi), n_sets,
                                fc::PartitionFamily::Gaussian, col + "_")};
  };
  const auto treat_part = partition_for(treatment);
  const auto conf_part = partition_for(confounder);
  const auto out_part = partition_for(outcome);

  const auto labeled =
      fc::fuzzify_dataset(data, {treat_part, conf_part, out_part});
  const double support = cfg.support_or(0.05);
  const double confidence = cfg.confidence_or(0.6);
  const auto base = fc::extract_rules_apriori(
      labeled, {treat_part, conf_part}, out_part, support, confidence);
  std::cout << "mined " << base.rules().size() << " rules (support >= "
            << support << ", confidence >= " << confidence << ", " << n_sets
            << " gaussian sets per variable)\n";

  const std::string out = cfg.out_path.value_or("rules.json");
  fc::save_json_file(out, fc::rulebase_to_json(base));
  std::cout << "wrote " << out << "\n";

  // Prediction check on the leading rows.
  const std::size_t k = std::min<std::size_t>(cfg.predict_rows.value_or(100),
                                              data.n_rows());
  double mae = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    const double pred = base.infer({{treatment, data.column(treatment)[r]},
                                    {confounder, data.column(confounder)[r]}},
                                   fc::Defuzzifier::Centroid);
    mae += std::abs(pred - data.column(outcome)[r]);
  }
  mae /= static_cast<double>(k);
  const auto [o_lo, o_hi] = column_range(data, outcome);
  std::cout << "prediction MAE over first " << k << " rows: " << fmt(mae)
            << " (" << fmt(100.0 * mae / (o_hi - o_lo))
            << "% of the outcome range)\n";

  // Effect table from the extracted-rule curves, one row per treatment.
  std::vector<std::vector<std::string>> rows;
  const std::size_t n_mc = cfg.n_mc_or(1500);
  const auto grid_points = cfg.grid_or(101);
  struct Role { std::string treat, conf; };
  for (const Role& role : {Role{treatment, confounder},
                           Role{confounder, treatment}}) {
    const auto [lo, hi] = column_range(data, role.treat);
    const fc::Universe tu = fc::Universe::continuous(lo, hi);
    const auto curve = fc::outcome_curve_via_rules(
        base, role.treat, fc::empirical_density(data, role.conf, 50),
        fc::linspace(lo, hi, grid_points), n_mc,
        fc::RandomSource(cfg.seed_or_default(), 2), fc::Defuzzifier::Centroid,
        false);
    const auto pair = fc::builtins::fig1a_pair(tu);
    const auto f_t = fc::empirical_density(data, role.treat, 50);
    rows.push_back({role.treat, fmt(fc::fate(curve, pair).value),
                    fmt(fc::nfate(curve, pair).value),
                    fmt(fc::gfate(curve, pair, f_t).value),
                    fmt(fc::ngfate(curve, pair, f_t).value)});
  }
  emit_table({"treatment", "FATE", "NFATE", "GFATE", "NGFATE"}, rows,
             std::nullopt);
  return 0;
}

int dispatch(const std::string& name, CommandFlags& flags) {
  flags.finalize();
  if (name == "generate") return cmd_generate(flags.cfg);
  if (name == "effects") return cmd_effects(flags.cfg);
  if (name == "tipping") return cmd_tipping(flags.cfg);
  if (name == "surface") return cmd_surface(flags.cfg);
  if (name == "rules") return cmd_rules(flags.cfg);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy causal effects on SCMs, datasets, and fuzzy systems"};
  app.require_subcommand(1);

  std::map<std::string, CommandFlags> flags;
  for (const char* name : {"generate", "effects", "tipping", "surface",
                           "rules"}) {
    CLI::App* cmd = app.add_subcommand(
        name,
        std::string(name) == "generate"
            ? "Generate a synthetic dataset from an SCM"
        : std::string(name) == "effects"
            ? "Estimate ATE/FATE/NFATE/GFATE/NGFATE on data"
        : std::string(name) == "tipping"
            ? "Reproduce the tipping-effect tables"
        : std::string(name) == "surface"
            ? "Emit defuzzified response surfaces as CSV"
            : "Mine fuzzy rules with Apriori and report effects");
    add_common_flags(cmd, flags[name]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, flags[name]);
  } catch (const fc::Error& e) {
    std::cerr << "error [" << fc::error_code_name(e.code()) << "]: "
              << e.what() << "\n";
    switch (e.code()) {
      case fc::ErrorCode::InvalidArgument:
        return kExitUsage;
      case fc::ErrorCode::IoError:
        return kExitIo;
      default:
        return kExitDomain;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
