#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "boundfuel/io/config.hpp"

namespace boundfuel {

struct ExperimentInfo {
  std::string id;
  std::string description;
};

const std::vector<ExperimentInfo>& experiments();

struct RunSummary {
  std::string output_dir;
  std::vector<std::string> files;
};

/// BOUNDFUEL_OUTPUT_DIR, when set, replaces the configured output directory.
std::string resolve_output_dir(const ExperimentConfig& cfg);

/// Runs one experiment and writes its CSV/JSON files plus manifest.json.
/// PhysicsError propagates for precondition failures.
RunSummary run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace boundfuel
