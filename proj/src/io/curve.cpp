#include "boundfuel/io/curve.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boundfuel {

CurveOutput::CurveOutput(std::string name, std::string parameter, std::vector<double> grid)
    : name_(std::move(name)), parameter_(std::move(parameter)), grid_(std::move(grid)) {}

void CurveOutput::add_column(const std::string& column, std::vector<double> values) {
  if (values.size() != grid_.size())
    throw std::invalid_argument("CurveOutput: column '" + column + "' length differs from grid");
  if (has_column(column) || column == parameter_)
    throw std::invalid_argument("CurveOutput: duplicate column '" + column + "'");
  columns_.emplace_back(column, std::move(values));
}

bool CurveOutput::has_column(const std::string& column) const {
  for (const auto& c : columns_)
    if (c.first == column) return true;
  return false;
}

const std::vector<double>& CurveOutput::column(const std::string& column) const {
  if (column == parameter_) return grid_;
  for (const auto& c : columns_)
    if (c.first == column) return c.second;
  throw std::out_of_range("CurveOutput: no column '" + column + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("parse_number: trailing characters in '" + s + "'");
  return v;
}

std::string CurveOutput::to_csv() const {
  std::string out = parameter_;
  for (const auto& c : columns_) out += "," + c.first;
  out += "\n";
  for (std::size_t r = 0; r < grid_.size(); ++r) {
    out += format_number(grid_[r]);
    for (const auto& c : columns_) out += "," + format_number(c.second[r]);
    out += "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CurveOutput CurveOutput::from_csv(const std::string& name, const std::string& text) {
  std::stringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw std::invalid_argument("CSV: missing header");
  const auto header = split(line);
  std::vector<std::vector<double>> cols(header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw std::invalid_argument("CSV: ragged row in " + name);
    for (std::size_t i = 0; i < cells.size(); ++i) cols[i].push_back(parse_number(cells[i]));
  }
  CurveOutput c(name, header[0], cols[0]);
  for (std::size_t i = 1; i < header.size(); ++i) c.add_column(header[i], cols[i]);
  return c;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> sign_changes(const std::vector<double>& grid, const std::vector<double>& values,
                                 double zero_tol) {
  std::vector<double> out;
  auto positive = [&](double v) { return v > zero_tol; };
  for (std::size_t i = 1; i < grid.size() && i < values.size(); ++i) {
    const double a = values[i - 1], b = values[i];
    if (positive(a) == positive(b)) continue;
    // interpolate to the exact zero; clamped values carry no slope information
    const double va = std::abs(a) <= zero_tol ? 0.0 : a;
    const double vb = std::abs(b) <= zero_tol ? 0.0 : b;
    const double t = (va == vb) ? 0.0 : va / (va - vb);
    out.push_back(grid[i - 1] + t * (grid[i] - grid[i - 1]));
  }
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

}  // namespace boundfuel
