#pragma once

#include <string>
#include <vector>

namespace boundfuel {

struct ColumnDiff {
  std::string file;
  std::string column;
  double max_abs_dev;
  bool pass;
};

struct VerifyReport {
  std::vector<ColumnDiff> columns;
  std::vector<std::string> problems;  // missing files, shape mismatches
  bool pass() const;
  std::string to_text() const;
};

/// Compares every CSV and non-manifest JSON file of `reference` with its namesake in `produced`.
/// Column order, names and row counts must agree; non-finite sentinels must match exactly.
VerifyReport verify_outputs(const std::string& reference, const std::string& produced, double tolerance = 1e-9);

}  // namespace boundfuel
