#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boundfuel/io/curve.hpp"
#include "boundfuel/micromaser/temperature.hpp"

namespace boundfuel {

/// Atom decay rate and transit time that set the channel strength.
struct ExposureConfig {
  double gamma_mhz = 1.0;  // gamma / 2 pi
  double t_tr_ns = 50.0;

  double gadc_p(double nbar) const;
};

using NamedState = std::pair<std::string, DensityMatrix>;

/// Every atom of the cluster through the same GADC.
DensityMatrix expose(const DensityMatrix& cluster, double p, double nbar);

/// Pump coefficients and analytic temperature of a cluster after exposure.
struct PumpReading {
  PumpCoefficients coeffs;
  CavityTemperature temperature;
};
PumpReading pump_reading(const DensityMatrix& cluster, double p, const CavityConfig& cav);

/// Smolin, FLS at eps = 0, 0.5, 1, and the dephased FLS (any eps).
std::vector<NamedState> fig7_family();

/// One column T_<name> in Kelvin per state plus p_gadc; parameter t_tr_ns.
CurveOutput temperature_vs_ttr(const std::vector<NamedState>& family, const std::vector<double>& t_tr_ns,
                               const CavityConfig& cav, double gamma_mhz);

/// FLS after exposure: C, delta, T_kelvin, T_closed_form, rel_deviation.
CurveOutput temperature_vs_eps(const std::vector<double>& eps, const CavityConfig& cav, double p);

/// Horodecki pumping. T_units / T_kelvin come from the quoted closed-form coefficients;
/// *_sums columns evaluate the finite sums on the constructed state.
CurveOutput qutrit_temperature_curve(const std::vector<double>& alpha, const CavityConfig& cav);

/// Repeated-interaction temperature (units of omega) of unexposed FLS clusters.
double repeated_interaction_temperature(double eps, const CavityConfig& cav);

struct Table1Row {
  std::string state;
  double C;
  double delta;
  double T_kelvin;
  double lambda_abs;
  double xi_abs;
  bool gibbsian;
};

std::vector<Table1Row> table1(const CavityConfig& cav, double p);

}  // namespace boundfuel
