#pragma once

#include <complex>

#include <Eigen/Dense>

#include "boundfuel/core/hilbert_space.hpp"
#include "boundfuel/core/tolerances.hpp"

namespace boundfuel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

double max_hermiticity_defect(const Matrix& a);

/// Observable on a labeled space. The stored matrix is exactly Hermitian:
/// round-off below tolerance is symmetrized away on construction.
class HermitianOperator {
 public:
  HermitianOperator(HilbertSpace space, const Matrix& data, const Tolerances& tol = {});

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return data_; }
  int dimension() const noexcept { return space_.dimension(); }

 private:
  HilbertSpace space_;
  Matrix data_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  DensityMatrix(HilbertSpace space, const Matrix& data, const Tolerances& tol = {});

  static DensityMatrix pure(HilbertSpace space, const Vector& psi);
  static DensityMatrix maximally_mixed(HilbertSpace space);
  /// Diagonal state with the given populations.
  static DensityMatrix diagonal(HilbertSpace space, const RealVector& populations, const Tolerances& tol = {});

  const HilbertSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return data_; }
  int dimension() const noexcept { return space_.dimension(); }

  double expectation(const HermitianOperator& h) const;
  double purity() const;
  /// Natural-log entropy.
  double von_neumann_entropy() const;
  RealVector populations() const { return data_.diagonal().real(); }

 private:
  HilbertSpace space_;
  Matrix data_;
};

/// Checks and returns the minimum eigenvalue; throws std::invalid_argument
/// when any invariant is violated at the given tolerances.
double validate_density(const Matrix& data, const Tolerances& tol);

}  // namespace boundfuel
