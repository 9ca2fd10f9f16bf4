#include "boundfuel/app/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "boundfuel/channels/kraus.hpp"
#include "boundfuel/channels/lindblad.hpp"
#include "boundfuel/core/linalg.hpp"
#include "boundfuel/ergotropy/ergotropy.hpp"
#include "boundfuel/micromaser/collision.hpp"
#include "boundfuel/micromaser/propagator.hpp"
#include "boundfuel/micromaser/sweeps.hpp"
#include "boundfuel/singleshot/central_spin.hpp"
#include "boundfuel/states/states.hpp"

namespace boundfuel {

namespace {

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

CriterionResult c01() {
  const auto r = ergotropy(smolin_state(), qubit_cluster_hamiltonian(4));
  const bool ok = std::abs(r.W - 1.25) <= 1e-9 && std::abs(r.E_final + 1.25) <= 1e-9;
  return {1, "smolin ergotropy", ok, fmt("W=%.12f E_f=%.12f (tol 1e-9)", r.W, r.E_final)};
}

CriterionResult c02() {
  const auto c = ergotropy_curve_fls(linspace(0.0, 1.0, 101));
  const auto& err = c.column("abs_error");
  const double worst = *std::max_element(err.begin(), err.end());
  const auto h = qubit_cluster_hamiltonian(4);
  const double w_half = ergotropy(fls_state(0.5), h).W;
  const bool cont = std::abs(w_half - 0.75) <= 1e-6 && std::abs((1.25 - 0.5) - (0.25 + 0.5)) <= 1e-12;
  return {2, "fls ergotropy piecewise", worst <= 1e-6 && cont,
          fmt("max|W-formula|=%.3e over 101 points (tol 1e-6); W(0.5)=%.9f", worst, w_half)};
}

CriterionResult c03() {
  const auto grid = linspace(2.0, 5.0, 301);
  const auto c = ergotropy_curve_horodecki(grid);
  const auto& err = c.column("abs_error");
  double w1 = 0.0, w2 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double& w = grid[i] < 2.5 ? w1 : w2;
    w = std::max(w, err[i]);
  }
  const bool ok = w1 <= 1e-5 && w2 <= 1e-5;
  return {3, "horodecki ergotropy branches", ok,
          fmt("max dev [2,2.5)=%.3e, [2.5,5]=%.3e (tol 1e-5); ", w1, w2) + c.metadata().at("branch_discrepancy")};
}

CriterionResult c04() {
  const auto times = linspace(0.0, 0.4, 401);
  const auto c = ergotropy_dynamics(horodecki_state(4.2), 1.0, 0.5, times);
  const auto& mpt = c.column("min_pt_eigenvalue");
  std::vector<double> neg_mpt;
  for (double v : mpt) neg_mpt.push_back(-v);
  const auto death = sign_changes(c.grid(), neg_mpt);
  const auto& real = c.column("realignment");
  const auto real_cross = sign_changes(c.grid(), real);
  if (death.empty() || real_cross.empty())
    return {4, "distillability sudden death", false, "no negativity death or realignment sign change found"};
  const double td = death.front(), tr = real_cross.front();
  bool positive_window = true;
  for (std::size_t i = 0; i < times.size(); ++i)
    if (c.grid()[i] >= 0.1826 + 0.002 && c.grid()[i] <= 0.2426 - 0.002 && real[i] <= 0.0) positive_window = false;
  const bool ok = std::abs(td - 0.1826) <= 0.002 && std::abs(tr - 0.2426) <= 0.002 && positive_window && real[0] > 0;
  return {4, "distillability sudden death", ok,
          fmt("negativity death at %.5f (0.1826 +- 0.002); realignment > 0 until %.5f (0.2426 +- 0.002)", td, tr)};
}

CriterionResult c05() {
  const double p = ExposureConfig{1.0, 50.0}.gadc_p(0.05);
  return {5, "gadc strength", std::abs(p - 0.1587) <= 0.0005, fmt("p=%.6f (0.1587 +- 0.0005)", p)};
}

CriterionResult c06() {
  const double p = ExposureConfig{1.0, 50.0}.gadc_p(0.05);
  const auto rows = table1(CavityConfig{}, p);
  const double want[6][3] = {{0, 0.58, 0.75}, {0, 0.58, 0.75}, {-0.42, 0.58, 0.61},
                             {-0.85, 0.58, 0.47}, {2.52, 0.58, 1.53}, {0, 0.58, 0.75}};
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const bool row_ok = std::abs(r.C - want[i][0]) <= 0.01 && std::abs(r.delta - want[i][1]) <= 0.01 &&
                        std::abs(r.T_kelvin - want[i][2]) <= 0.01;
    ok = ok && row_ok;
    detail += r.state + fmt("(C=%.4f d=%.4f T=%.4fK", r.C, r.delta, r.T_kelvin) + (row_ok ? " ok) " : " MISS) ");
  }
  return {6, "table 1 reproduction", ok, detail + "tol 0.01"};
}

CriterionResult c07() {
  const double p = ExposureConfig{1.0, 50.0}.gadc_p(0.05);
  const auto c = temperature_vs_eps(linspace(0.0, 1.0, 101), CavityConfig{}, p);
  const auto& dev = c.column("rel_deviation");
  const auto& t = c.column("T_kelvin");
  const auto worst = std::max_element(dev.begin(), dev.end());
  bool mono = true;
  for (std::size_t i = 1; i < t.size(); ++i) mono = mono && t[i] < t[i - 1];
  const double at = c.grid()[static_cast<std::size_t>(worst - dev.begin())];
  return {7, "closed-form cavity temperature", *worst <= 0.005 && mono,
          fmt("max rel dev %.4f%% at eps=%.2f (tol 0.5%%); strictly decreasing=%g", 100 * *worst, at, mono ? 1 : 0)};
}

CriterionResult c08() {
  const double p = ExposureConfig{1.0, 50.0}.gadc_p(0.05);
  const CavityConfig cav;
  const std::vector<NamedState> states{{"smolin", smolin_state()},
                                       {"fls_0", fls_state(0.0)},
                                       {"fls_0.5", fls_state(0.5)},
                                       {"fls_1", fls_state(1.0)}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, rho] : states) {
    const auto t0 = std::chrono::steady_clock::now();
    const DensityMatrix pumped = expose(rho, p, cav.nbar_th);
    const double analytic = analytic_temperature(pump_coefficients_4qubit(pumped), cav).kelvin;
    CollisionOptions opt;
    opt.g_tau = 0.02;
    const auto r = collision_simulate(pumped, cav, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rel = std::abs(r.kelvin - analytic) / analytic;
    const bool row = rel <= 0.02 && secs < 300.0;
    ok = ok && row;
    detail += name + fmt("(sim %.4fK vs %.4fK, %.2f%%, %.1fs) ", r.kelvin, analytic, 100 * rel, secs);
  }
  return {8, "collision model cross-check", ok, detail + "tol 2%, 300s"};
}

CriterionResult c09() {
  const double gts[4] = {0.01, 0.02, 0.04, 0.08};
  const int f = 12;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::string detail;
  for (double gt : gts) {
    const double dev = propagator_deviation(propagator_second_order(gt, f), propagator_exact(gt, f), f - 5);
    const double x = std::log(gt), y = std::log(dev);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    detail += fmt("%.2f:%.3e ", gt, dev);
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  return {9, "second-order propagator", std::abs(slope - 3.0) <= 0.3,
          fmt("log-log slope %.4f (3 +- 0.3); ", slope) + detail};
}

CriterionResult c10() {
  const CentralSpinSystem sys;
  const auto grid = linspace(0.0, 100.0, 2001);
  double min_sigma = 1e300, max_defect = 0, max_drift = 0;
  for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const DensityMatrix cl = fls_state(eps);
    for (double tau : grid) {
      const auto s = evolve_single_shot(sys, cl, qubit_ground(), tau);
      min_sigma = std::min(min_sigma, s.sigma);
      max_defect = std::max(max_defect, s.gibbs_defect);
      max_drift = std::max(max_drift, std::abs(s.energy_drift));
    }
  }
  const bool ok = min_sigma >= -1e-9 && max_defect < 1e-9 && max_drift < 1e-9;
  return {10, "single-shot second law", ok,
          fmt("min sigma=%.3e (>= -1e-9), max Gibbs defect=%.3e, max energy drift=%.3e (< 1e-9)", min_sigma,
              max_defect, max_drift)};
}

CriterionResult c11() {
  const CentralSpinSystem sys;
  const CavityConfig cav;
  std::string detail;
  bool found = false;
  for (double eps : {0.0, 0.25, 0.5}) {
    const double line = repeated_interaction_temperature(eps, cav);
    double best = 0.0, at = 0.0;
    for (double tau : linspace(0.0, 10.0, 201)) {
      if (tau >= 10.0) break;
      const auto s = evolve_single_shot(sys, fls_state(eps), qubit_ground(), tau);
      if (s.T_eff.flag == TemperatureFlag::finite && s.T_eff.value > best) {
        best = s.T_eff.value;
        at = tau;
      }
    }
    if (best > line) found = true;
    detail += fmt("eps=%.2f max T=%.4g at tau=%.2f vs line %.4f; ", eps, best, at, line);
  }
  return {11, "single-shot beats repeated line", found, detail};
}

CriterionResult c12() {
  const auto grid = linspace(0.0, 2.0e6, 401);
  const auto c = temperature_vs_ttr(fig7_family(), grid, CavityConfig{}, 1.0);
  const double t_end = c.column("T_smolin").back();
  const auto& d = c.column("T_dephased");
  const auto& be = c.column("T_fls_0.5");
  const auto& fe = c.column("T_fls_1");
  bool order = true;
  for (std::size_t i = 0; i < grid.size(); ++i) order = order && d[i] >= be[i] - 1e-12 && be[i] >= fe[i] - 1e-12;
  const bool limit = std::abs(t_end - 0.16) <= 0.05 * 0.16;
  return {12, "exposure limits and ordering", limit && order,
          fmt("T_smolin(2 ms)=%.4fK (0.16 +- 5%%); ordering on 401 points=%g", t_end, order ? 1 : 0)};
}

CriterionResult c13() {
  const auto reports = run_property_suites(1000, 20240601ULL);
  bool ok = true;
  std::string detail;
  for (const auto& r : reports) {
    ok = ok && r.failures == 0 && r.instances >= 1000;
    detail += r.name + fmt(" %g/%g", r.instances - r.failures, r.instances) + " (" + r.worst + "); ";
  }
  return {13, "property suites", ok, detail};
}

// random helpers for the property suites
using Rng = std::mt19937_64;

Matrix ginibre(Rng& rng, int d) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  return g;
}

Matrix random_state_matrix(Rng& rng, int d) {
  const Matrix g = ginibre(rng, d);
  Matrix r = g * g.adjoint();
  return r / r.trace().real();
}

Matrix haar_unitary(Rng& rng, int d) {
  Eigen::HouseholderQR<Matrix> qr(ginibre(rng, d));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (int i = 0; i < d; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

Matrix random_hermitian(Rng& rng, int d) {
  const Matrix g = ginibre(rng, d);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

std::vector<PropertyReport> run_property_suites(int instances, unsigned long long seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<PropertyReport> out;

  {  // CPTP: GADC on every qubit and complete dephasing keep trace and positivity
    PropertyReport r{"cptp", instances, 0, ""};
    double worst = 0.0;
    for (int k = 0; k < instances; ++k) {
      const int nq = 1 + k % 4;
      const HilbertSpace s = HilbertSpace::qubits(nq);
      const DensityMatrix rho(s, random_state_matrix(rng, s.dimension()));
      const KrausChannel ch = (k % 5 == 4) ? complete_dephasing(2) : gadc(2.0 * u01(rng), u01(rng));
      double err = 0.0;
      try {
        const DensityMatrix out_state = apply_all(ch, rho);
        err = std::max(std::abs(out_state.matrix().trace().real() - 1.0),
                       std::max(0.0, -eigenvalues_hermitian(out_state.matrix()).minCoeff()));
      } catch (const std::exception&) {
        err = 1.0;
      }
      worst = std::max(worst, err);
      if (err > 1e-9) ++r.failures;
    }
    r.worst = fmt("worst %.2e, tol 1e-9", worst);
    out.push_back(r);
  }
  {  // Kraus completeness over the (nbar, p) square
    PropertyReport r{"kraus_completeness", instances, 0, ""};
    double worst = 0.0;
    for (int k = 0; k < instances; ++k) {
      const double d = gadc(5.0 * u01(rng), u01(rng)).completeness_defect();
      worst = std::max(worst, d);
      if (d > 1e-10) ++r.failures;
    }
    r.worst = fmt("worst %.2e, tol 1e-10", worst);
    out.push_back(r);
  }
  {  // RK4 order: endpoint error ratio for dt and dt/2 against exp(t L)
    PropertyReport r{"rk4_order", instances, 0, ""};
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < instances; ++k) {
      const double ge = 0.5 + 1.5 * u01(rng);
      const double gu = 0.5 + 1.5 * u01(rng);
      const auto gen = LindbladGenerator::qutrit_amplitude_damping(ge, gu);
      const Matrix rho0 = random_state_matrix(rng, 9);
      Matrix sup(81, 81);
      for (int c = 0; c < 81; ++c) {
        Matrix e = Matrix::Zero(9, 9);
        e(c % 9, c / 9) = 1.0;
        const Matrix col = gen.apply(e);
        sup.col(c) = Eigen::Map<const Vector>(col.data(), 81);
      }
      const double t_end = 1.0;
      const Vector exact_v = (sup * t_end).exp() * Eigen::Map<const Vector>(rho0.data(), 81);
      const Matrix exact = Eigen::Map<const Matrix>(exact_v.data(), 9, 9);
      auto run = [&](int steps) {
        Matrix x = rho0;
        for (int s = 0; s < steps; ++s) x = rk4_step(gen, x, t_end / steps);
        return (x - exact).cwiseAbs().maxCoeff();
      };
      const double ratio = run(40) / run(80);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      if (!(ratio >= 14.0 && ratio <= 18.0)) ++r.failures;
    }
    r.worst = fmt("ratio range [%.3f, %.3f], accept [14, 18]", lo, hi);
    out.push_back(r);
  }
  {  // ergotropy invariant under joint unitary conjugation
    PropertyReport r{"ergotropy_unitary_invariance", instances, 0, ""};
    double worst = 0.0;
    for (int k = 0; k < instances; ++k) {
      const int d = 2 + k % 15;
      const HilbertSpace s({d});
      const Matrix rho = random_state_matrix(rng, d);
      const Matrix h = random_hermitian(rng, d);
      const Matrix v = haar_unitary(rng, d);
      const double w1 = ergotropy(DensityMatrix(s, rho), HermitianOperator(s, h)).W;
      const double w2 = ergotropy(DensityMatrix(s, v * rho * v.adjoint(), Tolerances{1e-9, 1e-9, 1e-9}),
                                  HermitianOperator(s, v * h * v.adjoint(), Tolerances{1e-9}))
                            .W;
      const double err = std::abs(w1 - w2);
      worst = std::max(worst, err);
      if (err > 1e-9) ++r.failures;
    }
    r.worst = fmt("worst %.2e, tol 1e-9", worst);
    out.push_back(r);
  }
  {  // majorization: sigma = mixture of energy-preserving unitaries applied to rho
    PropertyReport r{"ergotropy_majorization", instances, 0, ""};
    double worst = std::numeric_limits<double>::infinity();
    const HermitianOperator h4 = qubit_cluster_hamiltonian(4);
    const auto eh = eig_hermitian(h4);
    const auto blocks = eh.degeneracies(1e-9);
    for (int k = 0; k < instances; ++k) {
      const int d = 16;
      const HilbertSpace s = HilbertSpace::qubits(4);
      const Matrix rho = random_state_matrix(rng, d);
      Matrix sigma = Matrix::Zero(d, d);
      const int terms = 2 + k % 4;
      double total = 0.0;
      std::vector<double> w(static_cast<std::size_t>(terms));
      for (auto& x : w) total += (x = u01(rng) + 1e-3);
      for (int t = 0; t < terms; ++t) {
        Matrix v = Matrix::Zero(d, d);  // block-diagonal in the energy eigenbasis
        for (const auto& b : blocks) v.block(b.first, b.first, b.multiplicity, b.multiplicity) = haar_unitary(rng, b.multiplicity);
        const Matrix uu = eh.vectors * v * eh.vectors.adjoint();
        sigma += (w[static_cast<std::size_t>(t)] / total) * uu * rho * uu.adjoint();
      }
      const DensityMatrix rs(s, rho);
      const DensityMatrix ss(s, sigma, Tolerances{1e-9, 1e-9, 1e-9});
      // premise: equal energy and spectrum(rho) majorizes spectrum(sigma)
      const RealVector a = eigenvalues_hermitian(rho).reverse();
      const RealVector b = eigenvalues_hermitian(sigma).reverse();
      double pa = 0, pb = 0;
      bool major = true;
      for (int i = 0; i < d; ++i) {
        pa += a(i);
        pb += b(i);
        major = major && pa >= pb - 1e-10;
      }
      const bool same_energy = std::abs(rs.expectation(h4) - ss.expectation(h4)) <= 1e-10;
      const double gap = ergotropy(rs, h4).W - ergotropy(ss, h4).W;
      worst = std::min(worst, gap);
      if (!major || !same_energy || gap < -1e-10) ++r.failures;
    }
    r.worst = fmt("min W(rho)-W(sigma) %.2e, tol -1e-10", worst);
    out.push_back(r);
  }
  return out;
}

CriterionResult evaluate_criterion(int id) {
  switch (id) {
    case 1: return c01();
    case 2: return c02();
    case 3: return c03();
    case 4: return c04();
    case 5: return c05();
    case 6: return c06();
    case 7: return c07();
    case 8: return c08();
    case 9: return c09();
    case 10: return c10();
    case 11: return c11();
    case 12: return c12();
    case 13: return c13();
    default: throw std::out_of_range("unknown criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> evaluate_all() {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(evaluate_criterion(i));
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] c%02d ", r.pass ? "PASS" : "FAIL", r.id);
  return head + r.name + ": " + r.detail;
}

}  // namespace boundfuel
