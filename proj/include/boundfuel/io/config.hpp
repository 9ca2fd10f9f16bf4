#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boundfuel/core/tolerances.hpp"
#include "boundfuel/micromaser/sweeps.hpp"

namespace boundfuel {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// INI-style experiment description.
///
///   [experiment]  id, output_dir
///   [physics]     omega_c_ghz, kappa_over_mu, nbar_th, gamma_mhz, t_tr_ns, g_tau, fock_dim, seed,
///                 collision_mode (deterministic | monte_carlo)
///   [sweep]       start, stop, points, values (comma separated), dt
///   [tolerances]  hermitian, trace, positivity, spectral, unitary, kraus
///
/// Unknown sections and keys are rejected.
struct ExperimentConfig {
  std::string id;
  std::string output_dir = "out";
  CavityConfig cavity;
  ExposureConfig exposure;
  double g_tau = 0.02;
  std::uint64_t seed = 1;
  bool monte_carlo = false;
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<int> points;
  std::vector<double> values;
  double dt = 0.0;  // 0 selects the integrator default
  Tolerances tolerances;
  std::string source;  // raw text, hashed into the manifest
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);
std::string hex64(std::uint64_t v);

/// Sweep grid from start/stop/points, falling back to the given defaults. `values` is not consulted.
std::vector<double> sweep_grid(const ExperimentConfig& cfg, double start, double stop, int points);

}  // namespace boundfuel
