#include "boundfuel/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "boundfuel/io/curve.hpp"

namespace boundfuel {

namespace fs = std::filesystem;

namespace {

double deviation(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return (std::isnan(a) && std::isnan(b)) ? 0.0 : INFINITY;
  if (std::isinf(a) || std::isinf(b)) return a == b ? 0.0 : INFINITY;
  return std::abs(a - b);
}

void flatten(const nlohmann::json& j, const std::string& path, std::vector<std::pair<std::string, nlohmann::json>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "/" + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), out);
  } else {
    out.emplace_back(path, j);
  }
}

void compare_json(const std::string& name, const std::string& ref, const std::string& got, double tol,
                  VerifyReport& rep) {
  std::vector<std::pair<std::string, nlohmann::json>> a, b;
  flatten(nlohmann::json::parse(ref), "", a);
  flatten(nlohmann::json::parse(got), "", b);
  if (a.size() != b.size()) {
    rep.problems.push_back(name + ": shape mismatch");
    return;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) {
      rep.problems.push_back(name + ": key mismatch at " + a[i].first);
      return;
    }
    if (a[i].second.is_number() && b[i].second.is_number()) {
      worst = std::max(worst, deviation(a[i].second.get<double>(), b[i].second.get<double>()));
    } else if (a[i].second != b[i].second) {
      rep.problems.push_back(name + ": value mismatch at " + a[i].first);
    }
  }
  rep.columns.push_back({name, "*", worst, worst <= tol});
}

}  // namespace

bool VerifyReport::pass() const {
  return problems.empty() && std::all_of(columns.begin(), columns.end(), [](const ColumnDiff& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
  std::string out;
  for (const auto& c : columns) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s %s max_abs_dev=%s\n", c.pass ? "ok  " : "FAIL", c.file.c_str(),
                  c.column.c_str(), format_number(c.max_abs_dev).c_str());
    out += buf;
  }
  for (const auto& p : problems) out += "FAIL " + p + "\n";
  out += pass() ? "verify: pass\n" : "verify: FAIL\n";
  return out;
}

VerifyReport verify_outputs(const std::string& reference, const std::string& produced, double tolerance) {
  if (!fs::is_directory(reference)) throw std::runtime_error("verify: not a directory: " + reference);
  if (!fs::is_directory(produced)) throw std::runtime_error("verify: not a directory: " + produced);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(reference))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  VerifyReport rep;
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    const std::string ext = f.extension().string();
    if (name == "manifest.json" || (ext != ".csv" && ext != ".json")) continue;
    const fs::path other = fs::path(produced) / name;
    if (!fs::exists(other)) {
      rep.problems.push_back(name + ": missing from produced output");
      continue;
    }
    if (ext == ".json") {
      compare_json(name, read_file(f.string()), read_file(other.string()), tolerance, rep);
      continue;
    }
    const CurveOutput a = CurveOutput::from_csv(name, read_file(f.string()));
    const CurveOutput b = CurveOutput::from_csv(name, read_file(other.string()));
    bool same_shape = a.parameter() == b.parameter() && a.rows() == b.rows() && a.columns().size() == b.columns().size();
    for (std::size_t k = 0; same_shape && k < a.columns().size(); ++k)
      same_shape = a.columns()[k].first == b.columns()[k].first;
    if (!same_shape) {
      rep.problems.push_back(name + ": shape mismatch");
      continue;
    }
    auto diff = [&](const std::string& col, const std::vector<double>& x, const std::vector<double>& y) {
      double worst = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, deviation(x[i], y[i]));
      rep.columns.push_back({name, col, worst, worst <= tolerance});
    };
    diff(a.parameter(), a.grid(), b.grid());
    for (std::size_t k = 0; k < a.columns().size(); ++k)
      diff(a.columns()[k].first, a.columns()[k].second, b.columns()[k].second);
  }
  return rep;
}

}  // namespace boundfuel
