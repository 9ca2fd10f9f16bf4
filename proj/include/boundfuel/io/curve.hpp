#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boundfuel {

/// Tabular sweep result: one parameter column followed by named columns of
/// equal length. Non-finite entries are written as the sentinels inf, -inf, nan.
class CurveOutput {
 public:
  CurveOutput() = default;
  CurveOutput(std::string name, std::string parameter, std::vector<double> grid);

  const std::string& name() const noexcept { return name_; }
  const std::string& parameter() const noexcept { return parameter_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  std::size_t rows() const noexcept { return grid_.size(); }

  void add_column(const std::string& column, std::vector<double> values);
  bool has_column(const std::string& column) const;
  const std::vector<double>& column(const std::string& column) const;
  const std::vector<std::pair<std::string, std::vector<double>>>& columns() const noexcept { return columns_; }

  std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  std::string to_csv() const;
  static CurveOutput from_csv(const std::string& name, const std::string& text);

 private:
  std::string name_;
  std::string parameter_;
  std::vector<double> grid_;
  std::vector<std::pair<std::string, std::vector<double>>> columns_;
  std::map<std::string, std::string> metadata_;
};

std::string format_number(double v);
double parse_number(const std::string& s);

/// Writes via a sibling temp file and rename.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Parameter values where `values` changes sign, located by linear interpolation.
/// Entries with |v| <= zero_tol count as zero and are treated as non-positive.
std::vector<double> sign_changes(const std::vector<double>& grid, const std::vector<double>& values,
                                 double zero_tol = 0.0);

std::vector<double> linspace(double a, double b, int n);

}  // namespace boundfuel
