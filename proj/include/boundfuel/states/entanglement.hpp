#pragma once

#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

/// Smallest eigenvalue of the partial transpose.
double min_pt_eigenvalue(const DensityMatrix& rho, const Bipartition& cut);

/// (||rho^{T_B}||_1 - 1) / 2; round-off below 1e-12 reported as 0.
double negativity(const DensityMatrix& rho, const Bipartition& cut);

/// Reshuffled matrix R_{(i,k),(j,l)} = rho_{(i,j),(k,l)}, i,k on block A and j,l on block B.
Matrix realign(const DensityMatrix& rho, const Bipartition& cut);

/// ||R(rho)||_1 - 1 (trace norm); positive values witness entanglement.
double realignment_parameter(const DensityMatrix& rho, const Bipartition& cut);

}  // namespace boundfuel
