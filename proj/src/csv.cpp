#include "fuzzycausal/csv.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fuzzycausal/errors.hpp"

namespace fuzzycausal {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      raise(ErrorCode::IoError, "cannot open '" + tmp.string() +
                                    "' for writing");
    }
    out << content;
    if (!out) {
      raise(ErrorCode::IoError, "failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    raise(ErrorCode::IoError,
          "cannot move '" + tmp.string() + "' to '" + path + "': " +
              ec.message());
  }
}

std::string dataset_to_csv(const Dataset& data) {
  std::ostringstream oss;
  for (std::size_t c = 0; c < data.n_cols(); ++c) {
    if (c > 0) oss << ',';
    oss << data.names()[c];
  }
  oss << '\n';
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    for (std::size_t c = 0; c < data.n_cols(); ++c) {
      if (c > 0) oss << ',';
      oss << format_double(data.cell(r, c));
    }
    oss << '\n';
  }
  return oss.str();
}

Dataset dataset_from_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::string line;
  if (!std::getline(in, line)) {
    raise(ErrorCode::IoError, "'" + path + "' is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> names;
  {
    std::stringstream header(line);
    std::string field;
    while (std::getline(header, field, ',')) names.push_back(field);
  }
  std::vector<std::vector<double>> columns(names.size());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    std::size_t c = 0;
    while (std::getline(row, field, ',')) {
      if (c >= names.size()) break;
      double v = 0.0;
      const auto res =
          std::from_chars(field.data(), field.data() + field.size(), v);
      if (res.ec != std::errc{}) {
        raise(ErrorCode::IoError, "'" + path + "' line " +
                                      std::to_string(line_no) +
                                      ": bad number '" + field + "'");
      }
      columns[c].push_back(v);
      ++c;
    }
    if (c != names.size()) {
      raise(ErrorCode::IoError, "'" + path + "' line " +
                                    std::to_string(line_no) +
                                    ": wrong field count");
    }
  }
  return Dataset(std::move(names), std::move(columns));
}

void write_dataset_csv(const std::string& path, const Dataset& data) {
  write_file_atomic(path, dataset_to_csv(data));
}

std::string labeled_to_csv(const LabeledDataset& data) {
  std::ostringstream oss;
  for (std::size_t c = 0; c < data.names.size(); ++c) {
    if (c > 0) oss << ',';
    oss << data.names[c];
  }
  oss << '\n';
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c > 0) oss << ',';
      oss << data.columns[c][r];
    }
    oss << '\n';
  }
  return oss.str();
}

std::string distribution_to_csv(const UnivariateDistribution& dist) {
  std::ostringstream oss;
  oss << (dist.is_continuous() ? "t,density" : "t,prob") << '\n';
  for (std::size_t i = 0; i < dist.values().size(); ++i) {
    oss << format_double(dist.universe().point(i)) << ','
        << format_double(dist.value(i)) << '\n';
  }
  return oss.str();
}

std::string effect_report_csv_header() {
  return "estimator,value,denominator,curve_provenance,grid_size,max_se,"
         "assumptions\n";
}

std::string effect_report_csv_row(const EffectReport& report) {
  std::ostringstream oss;
  oss << report.estimator << ',' << format_double(report.value) << ',';
  if (report.denominator.has_value()) oss << format_double(*report.denominator);
  oss << ',' << report.diagnostics.curve_provenance << ','
      << report.diagnostics.grid_size << ','
      << format_double(report.diagnostics.max_se) << ',';
  for (std::size_t i = 0; i < report.assumptions.size(); ++i) {
    if (i > 0) oss << "; ";
    oss << report.assumptions[i];
  }
  oss << '\n';
  return oss.str();
}

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream oss;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c > 0) oss << ',';
    oss << header[c];
  }
  oss << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) oss << ',';
      oss << row[c];
    }
    oss << '\n';
  }
  return oss.str();
}

std::string table_to_text(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream oss;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) oss << "  ";
      oss << row[c];
      for (std::size_t pad = row[c].size(); pad < widths[c]; ++pad) oss << ' ';
    }
    oss << '\n';
  };
  emit(header);
  std::vector<std::string> rule;
  for (std::size_t w : widths) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& row : rows) emit(row);
  return oss.str();
}

}  // namespace fuzzycausal
