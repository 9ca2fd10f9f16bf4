#pragma once

#include "boundfuel/micromaser/fock.hpp"
#include "boundfuel/micromaser/temperature.hpp"

namespace boundfuel {

struct CavitySteadyState {
  Matrix rho;
  int fock_dim;
  CavityAnalysis analysis;
  double kelvin;
};

/// Stationary state of
///   (mu r_e + kappa nbar)/2 L_e + (mu r_g + kappa (nbar + 1))/2 L_d
/// on a truncated Fock space, doubling the truncation until the top level holds
/// less than 1e-9. Requires lambda = xi = 0 and operation below threshold.
CavitySteadyState effective_lindblad_steady_state(const PumpCoefficients& c, const CavityConfig& cav);

}  // namespace boundfuel
