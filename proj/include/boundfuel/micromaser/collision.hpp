#pragma once

#include <cstdint>
#include <vector>

#include "boundfuel/micromaser/fock.hpp"
#include "boundfuel/micromaser/temperature.hpp"

namespace boundfuel {

/// H_int = g sum_k (a s_k^+ + a^dag s_k^-) on atoms (x) cavity; flat index = atom * F + photon.
Matrix tavis_cummings_interaction(int n_atoms, int fock_dim, double g = 1.0);

/// S(rho) = Tr_atoms[U (rho_a (x) rho) U^dagger] as a sparse superoperator on vec(rho).
SparseMatrix collision_superoperator(const DensityMatrix& rho_a, const Matrix& u, int fock_dim);

struct CollisionOptions {
  double g_tau = 0.02;
  double p_dt = 1.0;          // probability of a collision per step
  long max_steps = 400000;
  long check_every = 1000;
  double rel_tol = 1e-8;      // deterministic stop: relative change of T per check
  bool monte_carlo = false;
  std::uint64_t seed = 1;
  int fock_dim = 40;
};

struct CollisionResult {
  Matrix rho;  // deterministic: converged iterate; Monte Carlo: average over the second half
  CavityAnalysis analysis;
  double kelvin;
  Matrix stationary;  // null vector of the same coarse-grained generator
  CavityAnalysis stationary_analysis;
  double stationary_kelvin;
  std::vector<double> sample_steps;
  std::vector<double> sample_temperature;  // T / T_s along the run
  bool converged;
  long steps_taken;
};

/// Repeated collisions of clusters rho_a with the cavity, each followed by a
/// cavity-loss increment with kappa = (kappa/mu) (g tau)^2 per unit collision rate.
/// The cavity starts in the environment thermal state. Throws NumericalError when the
/// deterministic iteration has not converged within max_steps.
CollisionResult collision_simulate(const DensityMatrix& rho_a, const CavityConfig& cav,
                                   const CollisionOptions& opt = {});

}  // namespace boundfuel
