#pragma once

#include <vector>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

/// Cavity-operator blocks U_{ni} = <n|U(tau)|i> of the four-atom Tavis-Cummings
/// propagator, atoms in the computational basis. Stored row-major: blocks[n * 16 + i].
struct PropagatorBlocks {
  int fock_dim;
  std::vector<Matrix> blocks;

  const Matrix& at(int n, int i) const { return blocks[static_cast<std::size_t>(n * 16 + i)]; }
};

/// Second-order short-time expansion in g tau:
///   diagonal, k excitations: 1 - (g tau)^2 [k a a^dag + (4 - k) a^dag a] / 2
///   one e->g flip: -i g tau a^dag;   one g->e flip: -i g tau a
///   two e->g flips: -(g tau)^2 a^dag^2;   two g->e flips: -(g tau)^2 a^2
///   one flip each way: -(g tau)^2 (2 a^dag a + 1) / 2
PropagatorBlocks propagator_second_order(double g_tau, int fock_dim);

/// Blocks of exp(-i H_int tau) with H_int = g sum_k (a s_k^+ + a^dag s_k^-).
PropagatorBlocks propagator_exact(double g_tau, int fock_dim);

/// Largest elementwise difference restricted to photon numbers <= max_photon
/// (rows and columns), which keeps truncation effects out of the comparison.
double propagator_deviation(const PropagatorBlocks& a, const PropagatorBlocks& b, int max_photon);

}  // namespace boundfuel
