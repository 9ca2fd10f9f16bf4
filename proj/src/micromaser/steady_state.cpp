#include "boundfuel/micromaser/steady_state.hpp"

#include "boundfuel/core/errors.hpp"

namespace boundfuel {

CavitySteadyState effective_lindblad_steady_state(const PumpCoefficients& c, const CavityConfig& cav) {
  if (!c.heat_exchange_only()) throw PhysicsError("effective Lindblad route needs lambda = xi = 0");
  const double k = cav.kappa_over_mu;
  if (!(c.r_e < c.r_g + k)) throw PhysicsError("above maser threshold: no stationary cavity state");
  const double up = 0.5 * (c.r_e + k * cav.nbar_th);
  const double down = 0.5 * (c.r_g + k * (cav.nbar_th + 1.0));
  for (int f = std::max(cav.fock_dim, 2); f <= 2560; f *= 2) {
    Matrix rho = stationary_state(cavity_liouvillian(f, up, down), f);
    const CavityAnalysis an = analyse_cavity_state(rho);
    if (an.tail_mass < 1e-9) return {std::move(rho), f, an, an.temperature_units * cav.scale_kelvin()};
  }
  throw NumericalError("effective_lindblad_steady_state: Fock truncation did not converge");
}

}  // namespace boundfuel
