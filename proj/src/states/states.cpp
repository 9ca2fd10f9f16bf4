#include "boundfuel/states/states.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

Matrix pauli(int i) {
  Matrix m = Matrix::Zero(2, 2);
  switch (i) {
    case 0: m(0, 0) = m(1, 1) = 1.0; break;
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

HermitianOperator qubit_cluster_hamiltonian(int n_qubits, double omega) {
  const HilbertSpace space = HilbertSpace::qubits(n_qubits);
  Matrix h = Matrix::Zero(space.dimension(), space.dimension());
  for (int q = 0; q < n_qubits; ++q) h += embed(0.5 * omega * pauli(3), space, q);
  return HermitianOperator(space, h);
}

HermitianOperator qutrit_pair_hamiltonian(double omega) {
  const HilbertSpace space = HilbertSpace::qutrits(2);
  Matrix s3 = Matrix::Zero(3, 3);
  s3(0, 0) = 1.0;
  s3(2, 2) = -1.0;
  Matrix h = 0.5 * omega * (embed(s3, space, 0) + embed(s3, space, 1));
  return HermitianOperator(space, h);
}

DensityMatrix smolin_state() {
  Matrix rho = Matrix::Zero(16, 16);
  for (int i = 0; i < 4; ++i) {
    const Matrix s = pauli(i);
    rho += kron(kron(s, s), kron(s, s));
  }
  return DensityMatrix(HilbertSpace::qubits(4), rho / 16.0);
}

DensityMatrix fls_state(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw PhysicsError("fls_state: eps must lie in [0, 1]");
  Matrix rho = Matrix::Zero(16, 16);
  for (int k : {0, 5, 10, 15}) rho(k, k) = (1.0 - eps) / 4.0;
  const int pairs[4][2] = {{1, 4}, {2, 8}, {7, 13}, {11, 14}};
  for (const auto& p : pairs) {
    rho(p[0], p[0]) = rho(p[1], p[1]) = eps / 8.0;
    rho(p[0], p[1]) = rho(p[1], p[0]) = -eps / 8.0;
  }
  return DensityMatrix(HilbertSpace::qubits(4), rho);
}

Matrix horodecki_matrix(double alpha) {
  if (!(alpha >= 2.0 && alpha <= 5.0)) throw PhysicsError("horodecki_state: alpha must lie in [2, 5]");
  Matrix rho = Matrix::Zero(9, 9);
  for (int i : {0, 4, 8})
    for (int j : {0, 4, 8}) rho(i, j) = 2.0 / 21.0;
  for (int k : {1, 5, 6}) rho(k, k) = alpha / 21.0;
  for (int k : {2, 3, 7}) rho(k, k) = (5.0 - alpha) / 21.0;
  return rho;
}

DensityMatrix horodecki_state(double alpha) {
  const Matrix comp = horodecki_matrix(alpha);
  const int level_a[3] = {0, 2, 1};  // e, g, u
  const int level_b[3] = {0, 1, 2};  // e, u, g
  int map[9];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) map[3 * a + b] = 3 * level_a[a] + level_b[b];
  Matrix rho = Matrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) rho(map[i], map[j]) = comp(i, j);
  return DensityMatrix(HilbertSpace::qutrits(2), rho);
}

DensityMatrix plus_product_4() {
  Vector psi = Vector::Constant(16, Complex(0.25, 0.0));
  return DensityMatrix::pure(HilbertSpace::qubits(4), psi);
}

DensityMatrix maximally_mixed_4() { return DensityMatrix::maximally_mixed(HilbertSpace::qubits(4)); }

DensityMatrix thermal(double beta, const HermitianOperator& h) {
  if (std::isnan(beta) || beta < 0.0) throw PhysicsError("thermal: beta must be >= 0");
  const auto sd = eig_hermitian(h);
  const double e0 = sd.values(0);
  RealVector w(sd.values.size());
  for (int i = 0; i < w.size(); ++i) {
    const double de = sd.values(i) - e0;
    if (std::isinf(beta)) {
      w(i) = de <= 1e-9 ? 1.0 : 0.0;
    } else {
      w(i) = std::exp(-beta * de);
    }
  }
  w /= w.sum();
  Matrix rho = sd.vectors * w.cast<Complex>().asDiagonal() * sd.vectors.adjoint();
  return DensityMatrix(h.space(), rho);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Matrix d = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix(rho.space(), d);
}

DensityMatrix qubit_ground() {
  RealVector p(2);
  p << 0.0, 1.0;
  return DensityMatrix::diagonal(HilbertSpace::qubits(1), p);
}

DensityMatrix qubit_thermal(double temperature, double omega) {
  if (temperature < 0.0) throw PhysicsError("qubit_thermal: negative temperature");
  if (temperature == 0.0) return qubit_ground();
  const double x = std::exp(-omega / temperature);
  RealVector p(2);
  p << x / (1.0 + x), 1.0 / (1.0 + x);
  return DensityMatrix::diagonal(HilbertSpace::qubits(1), p);
}

}  // namespace boundfuel
