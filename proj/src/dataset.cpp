#include "fuzzycausal/dataset.hpp"

#include <cmath>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

Dataset::Dataset(std::vector<std::string> names,
                 std::vector<std::vector<double>> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
  if (names_.size() != columns_.size()) {
    raise(ErrorCode::InvalidArgument, "column name/data count mismatch");
  }
  if (columns_.empty() || columns_.front().empty()) {
    raise(ErrorCode::InvalidArgument, "dataset must have at least one row");
  }
  const std::size_t n = columns_.front().size();
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].size() != n) {
      raise(ErrorCode::InvalidArgument, "ragged dataset columns");
    }
    for (double v : columns_[c]) {
      if (!std::isfinite(v)) {
        raise(ErrorCode::InvalidArgument,
              "dataset contains a non-finite value in column " + names_[c]);
      }
    }
  }
}

std::size_t Dataset::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  raise(ErrorCode::ColumnMissing, "no column named '" + name + "'");
}

bool Dataset::has_column(const std::string& name) const {
  for (const auto& n : names_) {
    if (n == name) return true;
  }
  return false;
}

std::size_t LabeledDataset::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  raise(ErrorCode::ColumnMissing, "no labeled column named '" + name + "'");
}

}  // namespace fuzzycausal
