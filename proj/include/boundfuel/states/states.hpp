#pragma once

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

// Pauli matrices in the (e, g) basis.
Matrix pauli(int i);

/// H = (omega/2) sum_i sigma_z^(i) on n qubits; spectrum {-n/2..n/2} omega.
HermitianOperator qubit_cluster_hamiltonian(int n_qubits, double omega = 1.0);

/// H = (omega/2)(s3 x 1 + 1 x s3), s3 = diag(1, 0, -1) on (e, u, g).
HermitianOperator qutrit_pair_hamiltonian(double omega = 1.0);

/// V-type qutrit: e and u both at +omega/2, g at -omega/2.
struct QutritLevelScheme {
  double omega = 1.0;
  double energy_e() const { return 0.5 * omega; }
  double energy_u() const { return 0.5 * omega; }
  double energy_g() const { return -0.5 * omega; }
};

/// (1/16) sum_i sigma_i^{x4}.
DensityMatrix smolin_state();

/// Four-qubit FLS family, eps in [0, 1]; PPT for eps <= 1/2.
DensityMatrix fls_state(double eps);

/// 9x9 matrix exactly as displayed for the Horodecki family, computational basis |ab>, a,b in {0,1,2}.
Matrix horodecki_matrix(double alpha);

/// Horodecki state in the energy basis (ee,eu,eg,ue,uu,ug,ge,gu,gg).
/// Qutrit A levels (0,1,2) -> (e,g,u), qutrit B levels (0,1,2) -> (e,u,g).
DensityMatrix horodecki_state(double alpha);

DensityMatrix plus_product_4();
DensityMatrix maximally_mixed_4();

/// Gibbs state exp(-beta H)/Z; beta = +inf gives the uniform mixture over the ground space.
DensityMatrix thermal(double beta, const HermitianOperator& h);

/// Drops every off-diagonal element. All cluster Hamiltonians here are diagonal
/// in the stored basis, so this is complete dephasing in the energy basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// Ground |g> and excited |e> single qubit states.
DensityMatrix qubit_ground();
DensityMatrix qubit_thermal(double temperature, double omega = 1.0);

}  // namespace boundfuel
