#include "boundfuel/micromaser/sweeps.hpp"

#include <cmath>
#include <numbers>

#include "boundfuel/channels/kraus.hpp"
#include "boundfuel/micromaser/coefficients.hpp"
#include "boundfuel/states/states.hpp"

namespace boundfuel {

double ExposureConfig::gadc_p(double nbar) const {
  return gadc_strength(2.0 * std::numbers::pi * gamma_mhz * 1e6, t_tr_ns * 1e-9, nbar);
}

DensityMatrix expose(const DensityMatrix& cluster, double p, double nbar) {
  return apply_all(gadc(nbar, p), cluster);
}

PumpReading pump_reading(const DensityMatrix& cluster, double p, const CavityConfig& cav) {
  const PumpCoefficients c = pump_coefficients_4qubit(expose(cluster, p, cav.nbar_th));
  return {c, analytic_temperature(c, cav)};
}

std::vector<NamedState> fig7_family() {
  return {{"smolin", smolin_state()},
          {"fls_0", fls_state(0.0)},
          {"fls_0.5", fls_state(0.5)},
          {"fls_1", fls_state(1.0)},
          {"dephased", dephase(fls_state(1.0))}};
}

CurveOutput temperature_vs_ttr(const std::vector<NamedState>& family, const std::vector<double>& t_tr_ns,
                               const CavityConfig& cav, double gamma_mhz) {
  CurveOutput c("micromaser_ttr", "t_tr_ns", t_tr_ns);
  std::vector<double> ps;
  for (double t : t_tr_ns) ps.push_back(ExposureConfig{gamma_mhz, t}.gadc_p(cav.nbar_th));
  for (const auto& [name, rho] : family) {
    std::vector<double> temps;
    for (double p : ps) temps.push_back(pump_reading(rho, p, cav).temperature.kelvin);
    c.add_column("T_" + name, std::move(temps));
  }
  c.add_column("p_gadc", std::move(ps));
  return c;
}

CurveOutput temperature_vs_eps(const std::vector<double>& eps, const CavityConfig& cav, double p) {
  std::vector<double> cs, ds, ts, tf, dev;
  for (double e : eps) {
    const auto r = pump_reading(fls_state(e), p, cav);
    cs.push_back(r.coeffs.C);
    ds.push_back(r.coeffs.delta);
    ts.push_back(r.temperature.kelvin);
    tf.push_back(fls_temperature_closed_form(e));
    dev.push_back(std::abs(ts.back() - tf.back()) / tf.back());
  }
  CurveOutput c("micromaser_eps", "eps", eps);
  c.add_column("C", std::move(cs));
  c.add_column("delta", std::move(ds));
  c.add_column("T_kelvin", std::move(ts));
  c.add_column("T_closed_form", std::move(tf));
  c.add_column("rel_deviation", std::move(dev));
  c.metadata()["p_gadc"] = format_number(p);
  return c;
}

CurveOutput qutrit_temperature_curve(const std::vector<double>& alpha, const CavityConfig& cav) {
  std::vector<double> tu, tk, re, rd, tu_s, re_s, rd_s, lam_s, xi_s;
  for (double a : alpha) {
    const auto cf = horodecki_coefficients_closed_form(a);
    const auto t = qutrit_effective_temperature(cf, cav);
    tu.push_back(t.units);
    tk.push_back(t.kelvin);
    re.push_back(cf.r_e);
    rd.push_back(cf.r_g);
    const auto cs = pump_coefficients_qutrit(horodecki_state(a));
    tu_s.push_back(qutrit_effective_temperature(cs, cav).units);
    re_s.push_back(cs.r_e);
    rd_s.push_back(cs.r_g);
    lam_s.push_back(std::abs(cs.lambda));
    xi_s.push_back(std::abs(cs.xi));
  }
  CurveOutput c("micromaser_qutrit", "alpha", alpha);
  c.add_column("T_units", std::move(tu));
  c.add_column("T_kelvin", std::move(tk));
  c.add_column("r_e", std::move(re));
  c.add_column("r_d", std::move(rd));
  c.add_column("T_units_sums", std::move(tu_s));
  c.add_column("r_e_sums", std::move(re_s));
  c.add_column("r_d_sums", std::move(rd_s));
  c.add_column("lambda_sums", std::move(lam_s));
  c.add_column("xi_sums", std::move(xi_s));
  c.metadata()["temperature"] = "effective; displacement from lambda = 4/21 not included";
  return c;
}

double repeated_interaction_temperature(double eps, const CavityConfig& cav) {
  return pump_reading(fls_state(eps), 0.0, cav).temperature.units;
}

std::vector<Table1Row> table1(const CavityConfig& cav, double p) {
  const std::vector<NamedState> rows{{"smolin", smolin_state()},
                                     {"fls_eps_0", fls_state(0.0)},
                                     {"fls_eps_0.5", fls_state(0.5)},
                                     {"fls_eps_1", fls_state(1.0)},
                                     {"plus_product", plus_product_4()},
                                     {"maximally_mixed", maximally_mixed_4()}};
  std::vector<Table1Row> out;
  for (const auto& [name, rho] : rows) {
    const auto r = pump_reading(rho, p, cav);
    out.push_back({name, r.coeffs.C, r.coeffs.delta, r.temperature.kelvin, std::abs(r.coeffs.lambda),
                   std::abs(r.coeffs.xi), r.temperature.gibbsian});
  }
  return out;
}

}  // namespace boundfuel
