#include "boundfuel/micromaser/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

Matrix annihilation(int fock_dim) {
  Matrix a = Matrix::Zero(fock_dim, fock_dim);
  for (int m = 1; m < fock_dim; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return a;
}

SparseMatrix annihilation_sparse(int fock_dim) {
  SparseMatrix a(fock_dim, fock_dim);
  std::vector<Eigen::Triplet<Complex>> t;
  for (int m = 1; m < fock_dim; ++m) t.emplace_back(m - 1, m, std::sqrt(static_cast<double>(m)));
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

Vector vec(const Matrix& rho) { return Eigen::Map<const Vector>(rho.data(), rho.size()); }

Matrix unvec(const Vector& v, int fock_dim) { return Eigen::Map<const Matrix>(v.data(), fock_dim, fock_dim); }

SparseMatrix sandwich(const SparseMatrix& left, const SparseMatrix& right) {
  SparseMatrix rt = right.transpose();
  return Eigen::kroneckerProduct(rt, left).eval();
}

SparseMatrix cavity_liouvillian(int fock_dim, double up, double down) {
  const SparseMatrix a = annihilation_sparse(fock_dim);
  const SparseMatrix ad = a.adjoint();
  SparseMatrix id(fock_dim, fock_dim);
  id.setIdentity();
  const SparseMatrix aad = a * ad;
  const SparseMatrix ada = ad * a;
  const SparseMatrix le = 2.0 * sandwich(ad, a) - sandwich(aad, id) - sandwich(id, aad);
  const SparseMatrix ld = 2.0 * sandwich(a, ad) - sandwich(ada, id) - sandwich(id, ada);
  return (Complex(up) * le + Complex(down) * ld).eval();
}

Matrix stationary_state(const SparseMatrix& generator, int fock_dim) {
  const int n = fock_dim * fock_dim;
  if (generator.rows() != n || generator.cols() != n) throw std::invalid_argument("stationary_state: shape mismatch");
  // swap row 0 for the trace functional
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(generator.nonZeros() + fock_dim));
  for (int k = 0; k < generator.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(generator, k); it; ++it)
      if (it.row() != 0) t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
  for (int m = 0; m < fock_dim; ++m) t.emplace_back(0, m * fock_dim + m, 1.0);
  SparseMatrix a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  a.makeCompressed();
  Eigen::SparseLU<SparseMatrix> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw NumericalError("stationary_state: factorization failed");
  Vector rhs = Vector::Zero(n);
  rhs(0) = 1.0;
  const Vector x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw NumericalError("stationary_state: solve failed");
  Matrix rho = unvec(x, fock_dim);
  return 0.5 * (rho + rho.adjoint());
}

CavityAnalysis analyse_cavity_state(const Matrix& rho) {
  const int f = static_cast<int>(rho.rows());
  CavityAnalysis out{};
  const RealVector p = rho.diagonal().real();
  out.temperature_units = p(1) > 0.0 ? 1.0 / std::log(p(0) / p(1)) : 0.0;
  for (int m = 0; m < f; ++m) out.mean_photons += m * p(m);
  out.tail_mass = p(f - 1);
  Matrix off = rho;
  off.diagonal().setZero();
  out.off_diagonal = trace_norm(off);
  const double r0 = p(1) / p(0);
  for (int m = 1; m + 1 < f; ++m) {
    if (p(m + 1) < 1e-12) break;
    out.gibbs_deviation = std::max(out.gibbs_deviation, std::abs(p(m + 1) / p(m) - r0) / r0);
  }
  return out;
}

}  // namespace boundfuel
