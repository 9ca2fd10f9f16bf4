#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"
#include "boundfuel/states/basis_map.hpp"
#include "boundfuel/states/entanglement.hpp"
#include "boundfuel/states/state_io.hpp"
#include "boundfuel/states/states.hpp"

using namespace boundfuel;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

const Bipartition kHalf{{2, 3}};  // AB | CD
const Bipartition kQutritCut{{1}};

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("basis map") {
    const BasisMap m(4);
    CHECK(m.label(0) == "eeee");
    CHECK(m.label(15) == "gggg");
    CHECK(m.index("eegg") == 3);
    // n = 1 + 8a + 4b + 2c + d with e = 0, g = 1
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            std::string s;
            for (int x : {a, b, c, d}) s += x ? 'g' : 'e';
            CHECK(m.index(s) + 1 == 1 + 8 * a + 4 * b + 2 * c + d);
          }
    CHECK(m.excitations(m.index("egee")) == 3);
    CHECK(qutrit_pair_index("ug") == 5);
  }

  TEST_CASE("cluster Hamiltonians") {
    const auto h = qubit_cluster_hamiltonian(4);
    CHECK(h.matrix()(0, 0).real() == doctest::Approx(2.0));
    CHECK(h.matrix()(15, 15).real() == doctest::Approx(-2.0));
    const auto hq = qutrit_pair_hamiltonian();
    RealVector want(9);
    want << 1.0, 0.5, 0.0, 0.5, 0.0, -0.5, 0.0, -0.5, -1.0;
    CHECK((hq.matrix().diagonal().real() - want).norm() < 1e-15);
  }

  TEST_CASE("smolin state") {
    const auto s = smolin_state();
    CHECK(std::abs(s.expectation(qubit_cluster_hamiltonian(4))) < 1e-15);
    const auto ev = eig_hermitian(s.matrix(), SortOrder::descending).values;
    for (int i = 0; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.25));
    for (int i = 4; i < 16; ++i) CHECK(std::abs(ev(i)) < 1e-12);
    // eigenvector (|eegg> + |ggee>)/sqrt 2 has eigenvalue 1/4
    Vector r1 = Vector::Zero(16);
    r1(BasisMap(4).index("eegg")) = r1(BasisMap(4).index("ggee")) = 1.0 / std::sqrt(2.0);
    CHECK(max_abs(s.matrix() * r1 - 0.25 * r1) < 1e-15);
  }

  TEST_CASE("smolin is invariant under every qubit permutation") {
    const auto s = smolin_state();
    std::vector<int> perm{0, 1, 2, 3};
    int count = 0;
    do {
      CHECK(max_abs(permute_factors(s.matrix(), s.space(), perm) - s.matrix()) < 1e-15);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
  }

  TEST_CASE("smolin is PPT across every balanced cut") {
    const auto s = smolin_state();
    for (const auto& cut : {Bipartition{{2, 3}}, Bipartition{{1, 3}}, Bipartition{{1, 2}}})
      CHECK(min_pt_eigenvalue(s, cut) > -1e-12);
  }

  TEST_CASE("fls state entries and spectrum") {
    const auto r0 = fls_state(0.0).matrix();
    for (int k : {0, 5, 10, 15}) CHECK(r0(k, k).real() == doctest::Approx(0.25));
    CHECK(max_abs(r0 - Matrix(r0.diagonal().asDiagonal())) == 0.0);
    const auto h = qubit_cluster_hamiltonian(4);
    for (double eps : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      const auto r = fls_state(eps);
      CHECK(std::abs(r.expectation(h)) < 1e-15);
      auto ev = eig_hermitian(r.matrix(), SortOrder::descending).values;
      std::vector<double> got(ev.data(), ev.data() + 16);
      std::vector<double> want{(1 - eps) / 4, (1 - eps) / 4, (1 - eps) / 4, (1 - eps) / 4, eps / 4, eps / 4, eps / 4,
                               eps / 4,       0, 0, 0, 0, 0, 0, 0, 0};
      std::sort(want.rbegin(), want.rend());
      for (int i = 0; i < 16; ++i) CHECK(got[static_cast<std::size_t>(i)] == doctest::Approx(want[static_cast<std::size_t>(i)]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fls_state(-0.01), PhysicsError);
    CHECK_THROWS_AS(fls_state(1.01), PhysicsError);
  }

  TEST_CASE("fls entries are affine in eps") {
    const Matrix a = fls_state(0.1).matrix(), b = fls_state(0.4).matrix(), c = fls_state(0.9).matrix();
    // c - a = (0.8/0.3) (b - a)
    CHECK(max_abs((c - a) - (0.8 / 0.3) * (b - a)) < 1e-14);
  }

  TEST_CASE("fls PPT boundary at eps = 1/2") {
    for (int k = 0; k <= 10; ++k) CHECK(negativity(fls_state(0.05 * k), kHalf) == 0.0);
    for (int k = 11; k <= 20; ++k) CHECK(negativity(fls_state(0.05 * k), kHalf) > 1e-6);
    CHECK(min_pt_eigenvalue(fls_state(0.6), kHalf) < 0.0);
  }

  TEST_CASE("horodecki family") {
    const Matrix m = horodecki_matrix(3.0);
    for (int i : {0, 4, 8})
      for (int j : {0, 4, 8}) CHECK(m(i, j).real() == doctest::Approx(2.0 / 21.0));
    for (double a : {2.0, 2.5, 3.0, 4.0, 4.2, 5.0}) {
      const auto r = horodecki_state(a);
      CHECK(r.matrix().trace().real() == doctest::Approx(1.0));
      // relabeling is a permutation: same spectrum as the displayed matrix
      CHECK((eigenvalues_hermitian(r.matrix()) - eigenvalues_hermitian(horodecki_matrix(a))).norm() < 1e-14);
    }
    CHECK(min_pt_eigenvalue(horodecki_state(4.2), kQutritCut) < 0.0);
    CHECK(negativity(horodecki_state(4.2), kQutritCut) > 0.0);
    for (double a : {2.0, 2.5, 3.0, 3.5, 4.0}) CHECK(negativity(horodecki_state(a), kQutritCut) == 0.0);
    // bound entangled window detected by realignment
    CHECK(realignment_parameter(horodecki_state(3.5), kQutritCut) > 0.0);
    CHECK(realignment_parameter(horodecki_state(4.2), kQutritCut) > 0.0);
    CHECK_THROWS_AS(horodecki_state(1.9), PhysicsError);
    CHECK_THROWS_AS(horodecki_state(5.1), PhysicsError);
  }

  TEST_CASE("negativity and realignment on textbook states") {
    Vector bell = Vector::Zero(4);
    bell(1) = 1.0 / std::sqrt(2.0);
    bell(2) = -1.0 / std::sqrt(2.0);
    const auto singlet = DensityMatrix::pure(HilbertSpace::qubits(2), bell);
    CHECK(negativity(singlet, Bipartition{{1}}) == doctest::Approx(0.5));
    CHECK(realignment_parameter(singlet, Bipartition{{1}}) == doctest::Approx(1.0));
    const auto prod = tensor({qubit_ground(), qubit_thermal(0.7)});
    CHECK(negativity(prod, Bipartition{{1}}) == 0.0);
    for (int d : {2, 3}) {
      const auto mm = DensityMatrix::maximally_mixed(HilbertSpace({d, d}));
      CHECK(realignment_parameter(mm, Bipartition{{1}}) <= 1e-12);
    }
    CHECK_THROWS_AS(negativity(singlet, Bipartition{{0, 1}}), std::invalid_argument);
  }

  TEST_CASE("reference states") {
    const auto plus = plus_product_4();
    for (int i = 0; i < 16; ++i) CHECK(plus.matrix()(i, i).real() == doctest::Approx(1.0 / 16));
    const auto d = dephase(smolin_state());
    CHECK(max_abs(d.matrix() - Matrix(smolin_state().matrix().diagonal().asDiagonal())) == 0.0);
    const auto h = qubit_cluster_hamiltonian(4);
    const auto cold = thermal(std::numeric_limits<double>::infinity(), h);
    CHECK(cold.matrix()(15, 15).real() == doctest::Approx(1.0));
    const auto hot = thermal(0.0, h);
    CHECK(max_abs(hot.matrix() - Matrix::Identity(16, 16) / 16.0) < 1e-14);
    const auto t1 = thermal(1.3, h);
    CHECK(t1.matrix()(0, 0).real() / t1.matrix()(1, 1).real() == doctest::Approx(std::exp(-1.3)));
  }

  TEST_CASE("json round trip is exact") {
    const auto r = horodecki_state(3.7);
    const auto back = state_from_json(state_to_json(r));
    CHECK(back.space().dims() == r.space().dims());
    CHECK(max_abs(back.matrix() - r.matrix()) == 0.0);
    CHECK_THROWS(state_from_json(R"({"dims":[2],"re":[[1,0]],"im":[[0,0]]})"));
  }
}
