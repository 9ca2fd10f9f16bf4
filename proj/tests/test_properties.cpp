#include <doctest.h>

#include <random>

#include "boundfuel/app/acceptance.hpp"
#include "boundfuel/core/linalg.hpp"
#include "boundfuel/ergotropy/ergotropy.hpp"
#include "boundfuel/states/entanglement.hpp"
#include "boundfuel/states/states.hpp"

using namespace boundfuel;

namespace {

Matrix haar(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> n;
  Matrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ();
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("randomized suites, reduced size") {
    for (const auto& r : run_property_suites(60, 99)) {
      INFO(r.name << ": " << r.worst);
      CHECK(r.instances == 60);
      CHECK(r.failures == 0);
    }
  }

  TEST_CASE("entanglement measures are local-unitary invariant") {
    std::mt19937_64 rng(5);
    const HilbertSpace q(std::vector<int>{3, 3});
    for (double a : {3.5, 4.5}) {
      const auto rho = horodecki_state(a);
      const Matrix u = kron(haar(rng, 3), haar(rng, 3));
      const DensityMatrix r2(q, u * rho.matrix() * u.adjoint());
      const Bipartition cut{{1}};
      CHECK(negativity(r2, cut) == doctest::Approx(negativity(rho, cut)).epsilon(1e-9));
      CHECK(realignment_parameter(r2, cut) == doctest::Approx(realignment_parameter(rho, cut)).epsilon(1e-9));
    }
  }

  TEST_CASE("partial trace of a product returns the factor") {
    const auto a = qubit_thermal(0.6);
    const auto b = horodecki_state(2.7);
    const auto ab = tensor({a, b});
    CHECK((partial_trace(ab, {0}).matrix() - a.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((partial_trace(ab, {1, 2}).matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("ergotropy is concave-free but bounded by the energy span") {
    const auto h = qubit_cluster_hamiltonian(4);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 10; ++k) {
      const double eps = u(rng);
      const auto r = ergotropy(fls_state(eps), h);
      CHECK(r.W >= 0.0);
      CHECK(r.W <= r.E_initial + 2.0 + 1e-12);
    }
  }
}
