#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

Matrix kron(const Matrix& a, const Matrix& b);

DensityMatrix tensor(std::span<const DensityMatrix> factors);
DensityMatrix tensor(std::initializer_list<DensityMatrix> factors);
HermitianOperator tensor(std::span<const HermitianOperator> factors);
HermitianOperator tensor(std::initializer_list<HermitianOperator> factors);

/// Places `local` on one factor of `space`, identity elsewhere.
Matrix embed(const Matrix& local, const HilbertSpace& space, int factor);

/// Reduced operator on the kept factors (ordered as in `space`).
Matrix partial_trace(const Matrix& a, const HilbertSpace& space, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Reorders tensor factors: factor k of the result is factor order[k] of the input.
Matrix permute_factors(const Matrix& a, const HilbertSpace& space, std::span<const int> order);

/// Two-block split of the factors; `second` lists the factors of block B.
struct Bipartition {
  std::vector<int> second;

  static Bipartition last_of(const HilbertSpace& space, int count);
  /// Throws std::invalid_argument unless B is a nonempty proper subset of valid, distinct factors.
  void validate(const HilbertSpace& space) const;
  std::vector<int> first(const HilbertSpace& space) const;
};

/// Transposes the B block; the result need not be positive.
Matrix partial_transpose(const Matrix& a, const HilbertSpace& space, const Bipartition& cut);
Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut);

enum class SortOrder { ascending, descending };

struct EigenBlock {
  double value;
  int first;  // column index into vectors
  int multiplicity;
};

struct SpectralDecomposition {
  RealVector values;
  Matrix vectors;  // columns
  SortOrder order = SortOrder::ascending;

  Matrix reconstruct() const;
  /// Groups consecutive eigenvalues closer than `tol`.
  std::vector<EigenBlock> degeneracies(double tol = 1e-9) const;
};

SpectralDecomposition eig_hermitian(const Matrix& a, SortOrder order = SortOrder::ascending,
                                    const Tolerances& tol = {});
SpectralDecomposition eig_hermitian(const HermitianOperator& h, SortOrder order = SortOrder::ascending);

RealVector eigenvalues_hermitian(const Matrix& a);

double trace_norm(const Matrix& a);

/// exp(-i H t), checked unitary.
Matrix matrix_exp_unitary(const Matrix& h, double t, const Tolerances& tol = {});
Matrix matrix_exp_unitary(const HermitianOperator& h, double t, const Tolerances& tol = {});

double unitarity_defect(const Matrix& u);

}  // namespace boundfuel
