#include <doctest.h>

#include "boundfuel/core/linalg.hpp"
#include "boundfuel/singleshot/central_spin.hpp"
#include "boundfuel/states/states.hpp"

using namespace boundfuel;

TEST_SUITE("singleshot") {
  TEST_CASE("effective temperature round trip and flags") {
    for (double t : {0.1, 0.5, 1.0, 3.0, 40.0}) {
      const auto r = effective_temperature(qubit_thermal(t));
      CHECK(r.flag == TemperatureFlag::finite);
      CHECK(r.value == doctest::Approx(t).epsilon(1e-10));
    }
    CHECK(effective_temperature(qubit_ground()).flag == TemperatureFlag::zero);
    CHECK(effective_temperature(qubit_ground()).value == 0.0);
    const auto mm = effective_temperature(DensityMatrix::maximally_mixed(HilbertSpace::qubits(1)));
    CHECK(mm.flag == TemperatureFlag::infinite);
    RealVector inv(2);
    inv << 0.7, 0.3;
    CHECK(effective_temperature(DensityMatrix::diagonal(HilbertSpace::qubits(1), inv)).flag ==
          TemperatureFlag::negative);
  }

  TEST_CASE("interaction conserves the bare energy") {
    const CentralSpinSystem sys;
    CHECK(sys.commutator_defect() < 1e-12);
    CHECK(unitarity_defect(sys.propagator(17.3)) < 1e-10);
    CHECK((sys.propagator(0.0) - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("single excitation swaps at the resonant time") {
    // one cluster qubit: |e>|g> <-> |g>|e> with coupling g, full transfer at g tau = pi/2
    const CentralSpinSystem sys(1, 1.0, 0.1);
    Vector psi = Vector::Zero(2);
    psi(0) = 1.0;
    const auto cluster = DensityMatrix::pure(HilbertSpace::qubits(1), psi);
    const double tau = std::acos(-1.0) / (2 * 0.1);
    const auto s = evolve_single_shot(sys, cluster, qubit_ground(), tau);
    // full transfer: the target ends in |e>, a negative-temperature population
    CHECK(s.T_eff.flag == TemperatureFlag::negative);
    CHECK(s.delta_Q == doctest::Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("entropy production equals the relative entropy route") {
    const CentralSpinSystem sys;
    for (double eps : {0.0, 0.5, 1.0})
      for (double tau : {3.0, 11.0, 27.5, 60.0}) {
        const auto s = evolve_single_shot(sys, fls_state(eps), qubit_ground(), tau);
        REQUIRE(s.T_eff.flag == TemperatureFlag::finite);
        CHECK(s.gibbsian);
        CHECK(std::abs(s.energy_drift) < 1e-12);
        CHECK(std::abs(s.purity_drift) < 1e-12);
        CHECK(s.sigma == doctest::Approx(s.sigma_relative_entropy).epsilon(1e-9));
        CHECK(s.sigma >= -1e-12);
      }
  }

  TEST_CASE("tau = 0 leaves the target in its ground state") {
    const auto s = evolve_single_shot(CentralSpinSystem(), smolin_state(), qubit_ground(), 0.0);
    CHECK(s.T_eff.flag == TemperatureFlag::zero);
    CHECK(std::abs(s.sigma) < 1e-12);
  }

  TEST_CASE("sweep layout") {
    const auto g = default_tau_grid();
    CHECK(g.size() == 2001);
    CHECK(g.back() == doctest::Approx(100.0));
    const auto curves = single_shot_sweep({0.0, 1.0}, {0.0, 5.0, 10.0}, {2.5, 1.5});
    REQUIRE(curves.size() == 2);
    CHECK(curves[1].name() == "singleshot_eps_1.00");
    CHECK(curves[1].column("T_repeated")[2] == 1.5);
    CHECK_THROWS(single_shot_sweep({0.0}, {1.0}, {1.0, 2.0}));
  }
}
