#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boundfuel/core/linalg.hpp"
#include "boundfuel/states/states.hpp"

using namespace boundfuel;

namespace {

Matrix random_state(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  Matrix r = g * g.adjoint();
  return r / r.trace().real();
}

Matrix random_hermitian(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("hilbert space bookkeeping") {
    const HilbertSpace s({2, 3, 4});
    CHECK(s.dimension() == 24);
    CHECK(s.digits(s.flat_index(std::vector<int>{1, 2, 3})) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(HilbertSpace({2, 1}), std::invalid_argument);
    CHECK((HilbertSpace::qubits(2) * HilbertSpace::qutrits(1)).dims() == std::vector<int>{2, 2, 3});
  }

  TEST_CASE("density matrix validation") {
    const HilbertSpace q = HilbertSpace::qubits(1);
    Matrix bad = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityMatrix(q, bad), std::invalid_argument);  // trace 2
    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(q, neg), std::invalid_argument);
    Matrix nh = Matrix::Identity(2, 2) / 2.0;
    nh(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(q, nh), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix(HilbertSpace::qubits(2), Matrix::Identity(2, 2) / 2.0), std::invalid_argument);
  }

  TEST_CASE("tensor of operators") {
    const HermitianOperator z(HilbertSpace::qubits(1), pauli(3));
    const HermitianOperator id(HilbertSpace::qubits(1), pauli(0));
    const auto zz = tensor({z, id});
    RealVector want(4);
    want << 1, 1, -1, -1;
    CHECK((zz.matrix().diagonal().real() - want).norm() < 1e-15);
    CHECK(zz.space().dims() == std::vector<int>{2, 2});

    std::vector<DensityMatrix> mixed(4, DensityMatrix::maximally_mixed(HilbertSpace::qubits(1)));
    const auto m = tensor(std::span<const DensityMatrix>(mixed));
    CHECK((m.matrix() - Matrix::Identity(16, 16) / 16.0).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("smolin from the Pauli sum: 1/8 exactly on the listed upper-triangle entries") {
    const Matrix& s = smolin_state().matrix();
    // 1-based (row, col) pairs
    const int listed[12][2] = {{1, 1},  {1, 16}, {4, 4},   {4, 13},  {6, 6},   {6, 11},
                               {7, 7},  {7, 10}, {10, 10}, {11, 11}, {13, 13}, {16, 16}};
    Matrix expect = Matrix::Zero(16, 16);
    for (const auto& e : listed) expect(e[0] - 1, e[1] - 1) = expect(e[1] - 1, e[0] - 1) = 0.125;
    CHECK((s - expect).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("partial trace") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix a(HilbertSpace({3}), random_state(rng, 3));
      const DensityMatrix b(HilbertSpace({4}), random_state(rng, 4));
      const auto ab = tensor({a, b});
      CHECK((partial_trace(ab, {0}).matrix() - a.matrix()).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((partial_trace(ab, {1}).matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
    const auto s = smolin_state();
    for (int q = 0; q < 4; ++q)
      CHECK((partial_trace(s, {q}).matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
    Vector bell = Vector::Zero(4);
    bell(1) = 1.0 / std::sqrt(2.0);
    bell(2) = -1.0 / std::sqrt(2.0);
    const auto singlet = DensityMatrix::pure(HilbertSpace::qubits(2), bell);
    CHECK((partial_trace(singlet, {1}).matrix() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS_AS(partial_trace(singlet, {2}), std::invalid_argument);
  }

  TEST_CASE("partial transpose") {
    Vector bell = Vector::Zero(4);
    bell(1) = 1.0 / std::sqrt(2.0);
    bell(2) = -1.0 / std::sqrt(2.0);
    const auto singlet = DensityMatrix::pure(HilbertSpace::qubits(2), bell);
    const RealVector ev = eigenvalues_hermitian(partial_transpose(singlet, Bipartition{{1}}));
    CHECK(ev.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));

    std::mt19937_64 rng(3);
    const DensityMatrix a(HilbertSpace({2}), random_state(rng, 2));
    const DensityMatrix b(HilbertSpace({3}), random_state(rng, 3));
    const auto ab = tensor({a, b});
    const RealVector e1 = eigenvalues_hermitian(ab.matrix());
    const RealVector e2 = eigenvalues_hermitian(partial_transpose(ab, Bipartition{{1}}));
    CHECK((e1 - e2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(e2.minCoeff() > -1e-12);

    CHECK_THROWS_AS(partial_transpose(ab, Bipartition{{}}), std::invalid_argument);
    CHECK_THROWS_AS(partial_transpose(ab, Bipartition{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(partial_transpose(ab, Bipartition{{5}}), std::invalid_argument);
  }

  TEST_CASE("eig_hermitian") {
    const auto sz = eig_hermitian(pauli(3));
    CHECK(sz.values(0) == doctest::Approx(-1.0));
    CHECK(sz.values(1) == doctest::Approx(1.0));

    const auto ss = eig_hermitian(smolin_state().matrix(), SortOrder::descending);
    const auto blocks = ss.degeneracies(1e-9);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].value == doctest::Approx(0.25));
    CHECK(blocks[0].multiplicity == 4);
    CHECK(std::abs(blocks[1].value) < 1e-12);
    CHECK(blocks[1].multiplicity == 12);

    const auto h = eig_hermitian(qubit_cluster_hamiltonian(4));
    const auto hb = h.degeneracies(1e-9);
    REQUIRE(hb.size() == 5);
    const int mult[5] = {1, 4, 6, 4, 1};
    for (int k = 0; k < 5; ++k) {
      CHECK(hb[static_cast<std::size_t>(k)].value == doctest::Approx(k - 2.0));
      CHECK(hb[static_cast<std::size_t>(k)].multiplicity == mult[k]);
    }
    CHECK_THROWS_AS(eig_hermitian(pauli(1) + kI * pauli(3)), std::invalid_argument);
  }

  TEST_CASE("eig reconstruction on random Hermitian matrices up to 512") {
    std::mt19937_64 rng(11);
    for (int d : {2, 5, 16, 64, 128, 512}) {
      const Matrix a = random_hermitian(rng, d);
      const auto sd = eig_hermitian(a);
      CHECK((a - sd.reconstruct()).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((sd.vectors.adjoint() * sd.vectors - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9);
      for (int i = 1; i < d; ++i) CHECK(sd.values(i) >= sd.values(i - 1));
    }
  }

  TEST_CASE("trace norm and exponential") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) CHECK(trace_norm(random_state(rng, 6)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((matrix_exp_unitary(pauli(1), 0.0) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    const Matrix u = matrix_exp_unitary(pauli(1), std::numbers::pi / 2);
    CHECK((u - (-kI) * pauli(1)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(unitarity_defect(matrix_exp_unitary(random_hermitian(rng, 32), 3.7)) < 1e-9);
  }

  TEST_CASE("entropy and purity") {
    const auto m = DensityMatrix::maximally_mixed(HilbertSpace::qubits(2));
    CHECK(m.von_neumann_entropy() == doctest::Approx(std::log(4.0)));
    CHECK(m.purity() == doctest::Approx(0.25));
    CHECK(qubit_ground().von_neumann_entropy() == doctest::Approx(0.0));
  }
}
