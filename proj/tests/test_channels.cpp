#include <doctest.h>

#include <numbers>

#include "boundfuel/channels/kraus.hpp"
#include "boundfuel/channels/lindblad.hpp"
#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"
#include "boundfuel/states/states.hpp"

using namespace boundfuel;

namespace {

// Choi matrix sum_ij |i><j| (x) E(|i><j|)
Matrix choi(const KrausChannel& ch) {
  const int d = ch.dimension();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix eij = Matrix::Zero(d, d);
      eij(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = ch.apply(eij);
    }
  return c;
}

}  // namespace

TEST_SUITE("channels") {
  TEST_CASE("gadc is completely positive and trace preserving") {
    for (double nbar : {0.0, 0.05, 1.0, 10.0})
      for (double p : {0.0, 0.2, 1.0}) {
        const auto ch = gadc(nbar, p);
        CHECK(ch.completeness_defect() < 1e-14);
        const Matrix c = choi(ch);
        CHECK(eigenvalues_hermitian(c).minCoeff() > -1e-14);
        // Tr over the output gives the identity on the input
        Matrix tr_out(2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) tr_out(i, j) = c.block(i * 2, j * 2, 2, 2).trace();
        CHECK((tr_out - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
      }
  }

  TEST_CASE("gadc fixed point obeys detailed balance") {
    const double nbar = 0.3;
    const auto ch = gadc(nbar, 0.25);
    Matrix rho(2, 2);
    rho << 0.9, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.1;
    for (int k = 0; k < 400; ++k) rho = ch.apply(rho);
    CHECK(rho(0, 0).real() / rho(1, 1).real() == doctest::Approx(nbar / (nbar + 1)).epsilon(1e-10));
    CHECK(std::abs(rho(0, 1)) < 1e-12);
  }

  TEST_CASE("gadc strength for the default exposure") {
    const double p = gadc_strength(2 * std::numbers::pi * 1e6, 50e-9, 0.05);
    CHECK(p == doctest::Approx(1 - std::exp(-0.1 * std::numbers::pi * 1.1 / 2)).epsilon(1e-14));
    CHECK(p == doctest::Approx(0.158684).epsilon(1e-5));
    CHECK(gadc_strength(1.0, 0.0, 0.05) == 0.0);
  }

  TEST_CASE("invalid kraus sets are rejected") {
    CHECK_THROWS(KrausChannel({Matrix::Identity(2, 2) * 0.9}));
    CHECK_THROWS(gadc(-0.1, 0.5));
    CHECK_THROWS(gadc(0.1, 1.5));
  }

  TEST_CASE("local channels act factorwise") {
    const auto a = qubit_thermal(0.4), b = qubit_thermal(2.0);
    const auto ch = gadc(0.2, 0.3);
    const auto out = apply_local(ch, tensor({a, b}), 1);
    const auto want = tensor({a, DensityMatrix(b.space(), ch.apply(b.matrix()))});
    CHECK((out.matrix() - want.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    const auto all = apply_all(complete_dephasing(2), plus_product_4());
    CHECK((all.matrix() - Matrix::Identity(16, 16) / 16.0).cwiseAbs().maxCoeff() < 1e-14);
    const auto id = apply_all(identity_channel(2), smolin_state());
    CHECK((id.matrix() - smolin_state().matrix()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("lindblad decay matches the closed form") {
    const double ge = 1.0, gu = 0.5;
    const auto gen = LindbladGenerator::qutrit_amplitude_damping(ge, gu);
    Vector psi = Vector::Zero(9);
    psi(0) = 1.0;  // |ee>
    const auto rho0 = DensityMatrix::pure(HilbertSpace::qutrits(2), psi);
    const double t = 0.7;
    const auto s = lindblad_sample(rho0, gen, {t}, 1e-3).front();
    CHECK(s.matrix()(0, 0).real() == doctest::Approx(std::exp(-2 * ge * t)).epsilon(1e-10));
    CHECK(s.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("rk4 global error is fourth order") {
    const auto gen = LindbladGenerator::qutrit_amplitude_damping(1.0, 0.5);
    Vector psi = Vector::Zero(9);
    psi(0) = 1.0;
    const auto rho0 = DensityMatrix::pure(HilbertSpace::qutrits(2), psi);
    auto err = [&](int steps) {
      Matrix r = rho0.matrix();
      for (int k = 0; k < steps; ++k) r = rk4_step(gen, r, 1.0 / steps);
      return std::abs(r(0, 0).real() - std::exp(-2.0));
    };
    const double ratio = err(10) / err(20);
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
  }

  TEST_CASE("integrator samples and endpoint") {
    const auto gen = LindbladGenerator::qutrit_amplitude_damping(1.0, 0.5);
    const auto tr = lindblad_integrate(horodecki_state(3.0), gen, 1.0, 1e-3, 100);
    CHECK(tr.times.back() == doctest::Approx(1.0));
    CHECK(tr.times.size() == tr.states.size());
    CHECK(tr.times.size() == 11);
  }
}
