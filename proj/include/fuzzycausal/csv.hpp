#pragma once

#include <string>
#include <vector>

#include "fuzzycausal/dataset.hpp"
#include "fuzzycausal/distribution.hpp"
#include "fuzzycausal/effects.hpp"

namespace fuzzycausal {

/// Atomically writes `content` to `path` (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

/// CSV: header row, '.' decimal separator, LF line endings, 17 significant
/// digits so a reload is bit-exact.
std::string dataset_to_csv(const Dataset& data);
Dataset dataset_from_csv_file(const std::string& path);
void write_dataset_csv(const std::string& path, const Dataset& data);

std::string labeled_to_csv(const LabeledDataset& data);

/// Two columns `t,density` (continuous) or `t,prob` (discrete).
std::string distribution_to_csv(const UnivariateDistribution& dist);

/// Flat one-row form of an effect report for table assembly.
std::string effect_report_csv_header();
std::string effect_report_csv_row(const EffectReport& report);

/// Rectangular table with a header; used for effect/surface emission.
std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

/// Plain-text rendering with aligned columns.
std::string table_to_text(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows);

std::string format_double(double v);

}  // namespace fuzzycausal
