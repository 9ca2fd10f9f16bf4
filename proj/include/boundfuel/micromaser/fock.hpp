#pragma once

#include <Eigen/SparseCore>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Truncated annihilation operator on F Fock levels.
Matrix annihilation(int fock_dim);
SparseMatrix annihilation_sparse(int fock_dim);

/// Column-major vectorization: vec(A rho B) = (B^T kron A) vec(rho).
Vector vec(const Matrix& rho);
Matrix unvec(const Vector& v, int fock_dim);
SparseMatrix sandwich(const SparseMatrix& left, const SparseMatrix& right);

/// up * L_e + down * L_d, with L_e = 2 a^dag rho a - {a a^dag, rho} and
/// L_d = 2 a rho a^dag - {a^dag a, rho}.
SparseMatrix cavity_liouvillian(int fock_dim, double up, double down);

/// Null vector of a trace-preserving generator, normalized to unit trace.
Matrix stationary_state(const SparseMatrix& generator, int fock_dim);

struct CavityAnalysis {
  double temperature_units;  // from ln(p0 / p1)
  double mean_photons;
  double tail_mass;          // population of the top level
  double off_diagonal;       // trace norm of the off-diagonal part
  double gibbs_deviation;    // max relative spread of p_{n+1}/p_n over resolved levels
};

CavityAnalysis analyse_cavity_state(const Matrix& rho);

}  // namespace boundfuel
