#pragma once

#include <string>

#include "boundfuel/micromaser/coefficients.hpp"

namespace boundfuel {

struct CavityConfig {
  double omega_c_ghz = 10.0;  // omega_c / 2 pi
  double kappa_over_mu = 1.0;
  double nbar_th = 0.05;
  int fock_dim = 40;

  /// h f / k_B in Kelvin (about 0.48 K at 10 GHz).
  double scale_kelvin() const;
  /// Environment temperature in Kelvin.
  double environment_kelvin() const;
};

struct CavityTemperature {
  double units;   // T / (hbar omega_c / k_B)
  double kelvin;
  bool gibbsian;  // false when lambda or xi is nonzero: the reading is formal
  std::string note;
};

/// Steady-state cavity temperature from the detailed-balance ratio
/// (R - delta + 2C + 2 kappa nbar / mu) / (R + delta + 2C + 2 kappa (nbar + 1) / mu).
/// Throws PhysicsError below threshold (delta + kappa/mu <= 0).
CavityTemperature analytic_temperature(const PumpCoefficients& c, const CavityConfig& cav);

/// Qutrit pair: (r_e + kappa nbar/mu) / (r_d + kappa (nbar + 1)/mu) = exp(-hbar omega_c / k_B T).
/// Flagged non-Gibbsian when lambda != 0.
CavityTemperature qutrit_effective_temperature(const PumpCoefficients& c, const CavityConfig& cav);

/// T(eps) = T_s / ln(1 + 1.58 / (1.76 - 0.85 eps)) in Kelvin, with T_s = 0.48 K.
double fls_temperature_closed_form(double eps);

double bose_einstein(double temperature_units);

}  // namespace boundfuel
