#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fuzzycausal {

/// Column-major table of reals with named columns; no missing values.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> names,
          std::vector<std::vector<double>> columns);

  std::size_t n_rows() const noexcept {
    return columns_.empty() ? 0 : columns_.front().size();
  }
  std::size_t n_cols() const noexcept { return columns_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Throws ColumnMissing for unknown names.
  std::size_t column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;

  const std::vector<double>& column(std::size_t i) const {
    return columns_[i];
  }
  const std::vector<double>& column(const std::string& name) const {
    return columns_[column_index(name)];
  }

  double cell(std::size_t row, std::size_t col) const {
    return columns_[col][row];
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

/// Labeled counterpart of a Dataset: each cell holds the index of the
/// partition attribute with maximal membership for that column.
struct LabeledDataset {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> columns;  // column-major

  std::size_t n_rows() const noexcept {
    return columns.empty() ? 0 : columns.front().size();
  }
  std::size_t column_index(const std::string& name) const;
};

}  // namespace fuzzycausal
