#pragma once

#include <vector>

#include "boundfuel/core/linalg.hpp"
#include "boundfuel/io/curve.hpp"

namespace boundfuel {

enum class TemperatureFlag { finite, zero, infinite, negative };

struct TemperatureReading {
  double value;  // units of omega; +inf when flagged infinite
  TemperatureFlag flag;
};

/// T = omega / ln(p_g / p_e) from the diagonal of a qubit state (index 0 = e).
/// p_e below 1e-15 reads as the exact ground state, T = 0.
TemperatureReading effective_temperature(const DensityMatrix& qubit, double omega = 1.0);

/// Cluster of N qubits (factors 0..N-1) coupled to a target qubit (factor N) by
/// H_int = g sum_i (s_i^+ s_0^- + h.c.).
class CentralSpinSystem {
 public:
  explicit CentralSpinSystem(int n_cluster = 4, double omega = 1.0, double g = 0.1);

  int n_cluster() const noexcept { return n_; }
  double omega() const noexcept { return omega_; }
  double coupling() const noexcept { return g_; }
  const HilbertSpace& space() const noexcept { return space_; }
  const HermitianOperator& h_cluster() const noexcept { return h_a_; }
  const HermitianOperator& h_target() const noexcept { return h_tq_; }
  const HermitianOperator& h_interaction() const noexcept { return h_int_; }
  HermitianOperator h_total() const;
  /// max |[H_a + H_tq, H_int]|
  double commutator_defect() const;
  Matrix propagator(double tau) const;

 private:
  int n_;
  double omega_, g_;
  HilbertSpace space_;
  HermitianOperator h_a_, h_tq_, h_int_;
  SpectralDecomposition eig_;
};

struct SingleShotSample {
  double tau;
  TemperatureReading T_eff;
  double delta_Q;
  double delta_S;
  double sigma;                   // Delta S - Delta Q / T(tau)
  double sigma_relative_entropy;  // D(rho_tq(0) || rho_tq(tau)) with rho_tq(tau) read as Gibbs
  double gibbs_defect;            // |off-diagonal| of the target state
  double energy_drift;            // change of Tr[(H_a + H_tq) rho]
  double purity_drift;
  bool gibbsian;                  // gibbs_defect < 1e-9
};

SingleShotSample evolve_single_shot(const CentralSpinSystem& sys, const DensityMatrix& cluster,
                                    const DensityMatrix& target0, double tau);

std::vector<double> default_tau_grid();

/// One curve per eps with columns T_eff, delta_Q, delta_S, sigma, gibbs_defect and
/// extra diagnostics. When `overlay` is nonempty it holds one repeated-interaction
/// temperature per eps, written as the constant column T_repeated.
std::vector<CurveOutput> single_shot_sweep(const std::vector<double>& eps, const std::vector<double>& tau_grid,
                                           const std::vector<double>& overlay = {},
                                           const CentralSpinSystem& sys = CentralSpinSystem());

}  // namespace boundfuel
