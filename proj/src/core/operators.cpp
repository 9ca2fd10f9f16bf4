#include "boundfuel/core/operators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace boundfuel {

namespace {

void require_square(const HilbertSpace& space, const Matrix& data, const char* who) {
  if (data.rows() != data.cols() || data.rows() != space.dimension()) {
    throw std::invalid_argument(std::string(who) + ": matrix shape does not match space dimension " +
                                std::to_string(space.dimension()));
  }
}

std::string fmt(const char* what, double value) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s (%.3e)", what, value);
  return buf;
}

}  // namespace

double max_hermiticity_defect(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(HilbertSpace space, const Matrix& data, const Tolerances& tol)
    : space_(std::move(space)) {
  require_square(space_, data, "HermitianOperator");
  const double defect = max_hermiticity_defect(data);
  if (defect > tol.hermitian) throw std::invalid_argument(fmt("HermitianOperator: not Hermitian", defect));
  data_ = 0.5 * (data + data.adjoint());
}

double validate_density(const Matrix& data, const Tolerances& tol) {
  const double defect = max_hermiticity_defect(data);
  if (defect > tol.hermitian) throw std::invalid_argument(fmt("DensityMatrix: not Hermitian", defect));
  const double tr = data.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) throw std::invalid_argument(fmt("DensityMatrix: trace != 1", tr));
  const Matrix h = 0.5 * (data + data.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol.positivity) throw std::invalid_argument(fmt("DensityMatrix: negative eigenvalue", min_ev));
  return min_ev;
}

DensityMatrix::DensityMatrix(HilbertSpace space, const Matrix& data, const Tolerances& tol)
    : space_(std::move(space)) {
  require_square(space_, data, "DensityMatrix");
  validate_density(data, tol);
  data_ = 0.5 * (data + data.adjoint());
}

DensityMatrix DensityMatrix::pure(HilbertSpace space, const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  const Vector v = psi / n;
  return DensityMatrix(std::move(space), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(HilbertSpace space) {
  const int d = space.dimension();
  return DensityMatrix(std::move(space), Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::diagonal(HilbertSpace space, const RealVector& populations, const Tolerances& tol) {
  Matrix m = populations.cast<Complex>().asDiagonal();
  return DensityMatrix(std::move(space), m, tol);
}

double DensityMatrix::expectation(const HermitianOperator& h) const {
  if (!(h.space() == space_)) throw std::invalid_argument("expectation: space mismatch");
  return (data_ * h.matrix()).trace().real();
}

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

double DensityMatrix::von_neumann_entropy() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double p : es.eigenvalues()) {
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

}  // namespace boundfuel
