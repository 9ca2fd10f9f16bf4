#include "boundfuel/singleshot/central_spin.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/states/states.hpp"

namespace boundfuel {

TemperatureReading effective_temperature(const DensityMatrix& qubit, double omega) {
  if (qubit.dimension() != 2) throw std::invalid_argument("effective_temperature: expects a qubit");
  const double pe = qubit.matrix()(0, 0).real();
  const double pg = qubit.matrix()(1, 1).real();
  if (pe <= 1e-15) return {0.0, TemperatureFlag::zero};
  if (pe == pg) return {std::numeric_limits<double>::infinity(), TemperatureFlag::infinite};
  const double t = omega / std::log(pg / pe);
  return {t, t > 0 ? TemperatureFlag::finite : TemperatureFlag::negative};
}

namespace {

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;  // |e><g|
  return m;
}

HermitianOperator build_cluster(const HilbertSpace& s, int n, double omega) {
  Matrix h = Matrix::Zero(s.dimension(), s.dimension());
  for (int q = 0; q < n; ++q) h += embed(0.5 * omega * pauli(3), s, q);
  return HermitianOperator(s, h);
}

HermitianOperator build_interaction(const HilbertSpace& s, int n, double g) {
  const Matrix target_minus = embed(sigma_plus().adjoint(), s, n);
  Matrix h = Matrix::Zero(s.dimension(), s.dimension());
  for (int q = 0; q < n; ++q) {
    const Matrix term = embed(sigma_plus(), s, q) * target_minus;
    h += g * (term + term.adjoint());
  }
  return HermitianOperator(s, h);
}

}  // namespace

CentralSpinSystem::CentralSpinSystem(int n_cluster, double omega, double g)
    : n_(n_cluster),
      omega_(omega),
      g_(g),
      space_(HilbertSpace::qubits(n_cluster + 1)),
      h_a_(build_cluster(space_, n_cluster, omega)),
      h_tq_(HermitianOperator(space_, embed(0.5 * omega * pauli(3), space_, n_cluster))),
      h_int_(build_interaction(space_, n_cluster, g)),
      eig_(eig_hermitian(h_a_.matrix() + h_tq_.matrix() + h_int_.matrix())) {
  if (n_cluster < 1) throw std::invalid_argument("CentralSpinSystem: empty cluster");
}

HermitianOperator CentralSpinSystem::h_total() const {
  return HermitianOperator(space_, h_a_.matrix() + h_tq_.matrix() + h_int_.matrix());
}

double CentralSpinSystem::commutator_defect() const {
  const Matrix h0 = h_a_.matrix() + h_tq_.matrix();
  return (h0 * h_int_.matrix() - h_int_.matrix() * h0).cwiseAbs().maxCoeff();
}

Matrix CentralSpinSystem::propagator(double tau) const {
  Vector ph(eig_.values.size());
  for (int i = 0; i < ph.size(); ++i) ph(i) = std::exp(-kI * (eig_.values(i) * tau));
  return eig_.vectors * ph.asDiagonal() * eig_.vectors.adjoint();
}

SingleShotSample evolve_single_shot(const CentralSpinSystem& sys, const DensityMatrix& cluster,
                                    const DensityMatrix& target0, double tau) {
  if (cluster.dimension() != (1 << sys.n_cluster()) || target0.dimension() != 2)
    throw std::invalid_argument("evolve_single_shot: cluster or target dimension mismatch");
  const Matrix rho0 = kron(cluster.matrix(), target0.matrix());
  const Matrix u = sys.propagator(tau);
  const Matrix rho = u * rho0 * u.adjoint();
  const int t = sys.n_cluster();
  const std::vector<int> keep{t};
  Tolerances loose;
  loose.trace = loose.positivity = loose.hermitian = 1e-9;
  const DensityMatrix tq(HilbertSpace::qubits(1), partial_trace(rho, sys.space(), keep), loose);

  SingleShotSample s{};
  s.tau = tau;
  s.T_eff = effective_temperature(tq, sys.omega());
  const Matrix h_local = 0.5 * sys.omega() * pauli(3);
  const double e0 = (target0.matrix() * h_local).trace().real();
  const double e1 = (tq.matrix() * h_local).trace().real();
  s.delta_Q = e1 - e0;
  s.delta_S = tq.von_neumann_entropy() - target0.von_neumann_entropy();
  const double temp = s.T_eff.value;
  if (s.T_eff.flag == TemperatureFlag::zero || s.T_eff.flag == TemperatureFlag::infinite) {
    s.sigma = s.delta_S;
  } else {
    s.sigma = s.delta_S - s.delta_Q / temp;
  }
  // D(p0 || p1) on the diagonals
  const double p0[2] = {target0.matrix()(0, 0).real(), target0.matrix()(1, 1).real()};
  const double p1[2] = {tq.matrix()(0, 0).real(), tq.matrix()(1, 1).real()};
  double d = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (p0[k] <= 0.0) continue;
    d += p0[k] * (std::log(p0[k]) - std::log(p1[k]));
  }
  s.sigma_relative_entropy = d;
  s.gibbs_defect = std::abs(tq.matrix()(0, 1));
  const Matrix h0 = sys.h_cluster().matrix() + sys.h_target().matrix();
  s.energy_drift = (rho * h0).trace().real() - (rho0 * h0).trace().real();
  s.purity_drift = (rho * rho).trace().real() - (rho0 * rho0).trace().real();
  s.gibbsian = s.gibbs_defect < 1e-9;
  return s;
}

std::vector<double> default_tau_grid() { return linspace(0.0, 100.0, 2001); }

std::vector<CurveOutput> single_shot_sweep(const std::vector<double>& eps, const std::vector<double>& tau_grid,
                                           const std::vector<double>& overlay, const CentralSpinSystem& sys) {
  if (!overlay.empty() && overlay.size() != eps.size())
    throw std::invalid_argument("single_shot_sweep: one overlay value per eps required");
  std::vector<CurveOutput> out;
  const DensityMatrix target = qubit_ground();
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const DensityMatrix cluster = fls_state(eps[k]);
    std::vector<double> temp, dq, ds, sig, sig_re, defect, drift;
    for (double tau : tau_grid) {
      const auto s = evolve_single_shot(sys, cluster, target, tau);
      temp.push_back(s.T_eff.value);
      dq.push_back(s.delta_Q);
      ds.push_back(s.delta_S);
      sig.push_back(s.sigma);
      sig_re.push_back(s.sigma_relative_entropy);
      defect.push_back(s.gibbs_defect);
      drift.push_back(s.energy_drift);
    }
    char name[64];
    std::snprintf(name, sizeof name, "singleshot_eps_%.2f", eps[k]);
    CurveOutput c(name, "tau", tau_grid);
    c.add_column("T_eff", std::move(temp));
    c.add_column("delta_Q", std::move(dq));
    c.add_column("delta_S", std::move(ds));
    c.add_column("sigma", std::move(sig));
    c.add_column("gibbs_defect", std::move(defect));
    c.add_column("sigma_relative_entropy", std::move(sig_re));
    c.add_column("energy_drift", std::move(drift));
    if (!overlay.empty()) c.add_column("T_repeated", std::vector<double>(tau_grid.size(), overlay[k]));
    c.metadata()["eps"] = format_number(eps[k]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace boundfuel
