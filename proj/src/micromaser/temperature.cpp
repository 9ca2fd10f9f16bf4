#include "boundfuel/micromaser/temperature.hpp"

#include <cmath>
#include <cstdio>

#include "boundfuel/core/errors.hpp"

namespace boundfuel {

namespace {
constexpr double kPlanck = 6.62607015e-34;
constexpr double kBoltzmann = 1.380649e-23;

CavityTemperature from_ratio(double up, double down, const CavityConfig& cav) {
  CavityTemperature t{};
  if (up <= 0.0) {
    t.units = 0.0;
  } else {
    t.units = 1.0 / std::log(down / up);
  }
  t.kelvin = t.units * cav.scale_kelvin();
  t.gibbsian = true;
  return t;
}

void check_config(const CavityConfig& cav) {
  if (!(cav.omega_c_ghz > 0.0)) throw PhysicsError("cavity: omega_c must be positive");
  if (!(cav.kappa_over_mu >= 0.0)) throw PhysicsError("cavity: kappa/mu must be >= 0");
  if (!(cav.nbar_th >= 0.0)) throw PhysicsError("cavity: nbar_th must be >= 0");
}

}  // namespace

double CavityConfig::scale_kelvin() const { return kPlanck * omega_c_ghz * 1e9 / kBoltzmann; }

double CavityConfig::environment_kelvin() const {
  if (nbar_th <= 0.0) return 0.0;
  return scale_kelvin() / std::log1p(1.0 / nbar_th);
}

CavityTemperature analytic_temperature(const PumpCoefficients& c, const CavityConfig& cav) {
  check_config(cav);
  const double k = cav.kappa_over_mu;
  if (!(c.delta + k > 0.0)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "above maser threshold: delta + kappa/mu = %.6g <= 0", c.delta + k);
    throw PhysicsError(buf);
  }
  const double up = c.R - c.delta + 2.0 * c.C + 2.0 * k * cav.nbar_th;
  const double down = c.R + c.delta + 2.0 * c.C + 2.0 * k * (cav.nbar_th + 1.0);
  if (up < 0.0) throw PhysicsError("analytic_temperature: negative excitation rate");
  CavityTemperature t = from_ratio(up, down, cav);
  if (!c.heat_exchange_only()) {
    t.gibbsian = false;
    char buf[128];
    std::snprintf(buf, sizeof buf, "non-Gibbsian pump: |lambda|=%.6g |xi|=%.6g", std::abs(c.lambda), std::abs(c.xi));
    t.note = buf;
  }
  return t;
}

CavityTemperature qutrit_effective_temperature(const PumpCoefficients& c, const CavityConfig& cav) {
  check_config(cav);
  const double k = cav.kappa_over_mu;
  if (!(c.r_e < c.r_g + k)) throw PhysicsError("qutrit pump above maser threshold: r_e >= r_d + kappa/mu");
  const double up = c.r_e + k * cav.nbar_th;
  const double down = c.r_g + k * (cav.nbar_th + 1.0);
  if (up < 0.0) throw PhysicsError("qutrit_effective_temperature: negative excitation rate");
  CavityTemperature t = from_ratio(up, down, cav);
  if (std::abs(c.lambda) > 1e-9 || std::abs(c.xi) > 1e-9) {
    t.gibbsian = false;
    t.note = "effective: displacement from lambda not included";
  }
  return t;
}

double fls_temperature_closed_form(double eps) { return 0.48 / std::log(1.0 + 1.58 / (1.76 - 0.85 * eps)); }

double bose_einstein(double temperature_units) {
  if (temperature_units <= 0.0) return 0.0;
  return 1.0 / std::expm1(1.0 / temperature_units);
}

}  // namespace boundfuel
