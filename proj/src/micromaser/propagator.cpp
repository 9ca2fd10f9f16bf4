#include "boundfuel/micromaser/propagator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"
#include "boundfuel/micromaser/collision.hpp"
#include "boundfuel/micromaser/fock.hpp"

namespace boundfuel {

PropagatorBlocks propagator_second_order(double g_tau, int fock_dim) {
  if (!(g_tau >= 0.0 && g_tau <= 0.1)) throw PhysicsError("propagator_second_order: need 0 <= g tau <= 0.1");
  const int f = fock_dim;
  const Matrix a = annihilation(f);
  const Matrix ad = a.adjoint();
  const Matrix id = Matrix::Identity(f, f);
  const double x = g_tau;
  const double x2 = x * x;
  PropagatorBlocks out{f, std::vector<Matrix>(256, Matrix::Zero(f, f))};
  for (int n = 0; n < 16; ++n) {
    for (int i = 0; i < 16; ++i) {
      // bits set = qubits in g
      const int lost = std::popcount(static_cast<unsigned>(n & ~i));    // e -> g going from i to n
      const int gained = std::popcount(static_cast<unsigned>(i & ~n));  // g -> e
      Matrix& u = out.blocks[static_cast<std::size_t>(n * 16 + i)];
      if (n == i) {
        const int k = 4 - std::popcount(static_cast<unsigned>(i));
        u = id - 0.5 * x2 * (k * (a * ad) + (4 - k) * (ad * a));
      } else if (lost == 1 && gained == 0) {
        u = -kI * x * ad;
      } else if (lost == 0 && gained == 1) {
        u = -kI * x * a;
      } else if (lost == 2 && gained == 0) {
        u = -x2 * ad * ad;
      } else if (lost == 0 && gained == 2) {
        u = -x2 * a * a;
      } else if (lost == 1 && gained == 1) {
        u = -0.5 * x2 * (2.0 * (ad * a) + id);
      }
    }
  }
  return out;
}

PropagatorBlocks propagator_exact(double g_tau, int fock_dim) {
  const int f = fock_dim;
  const Matrix u = matrix_exp_unitary(tavis_cummings_interaction(4, f, 1.0), g_tau);
  PropagatorBlocks out{f, std::vector<Matrix>(256)};
  for (int n = 0; n < 16; ++n)
    for (int i = 0; i < 16; ++i) out.blocks[static_cast<std::size_t>(n * 16 + i)] = u.block(n * f, i * f, f, f);
  return out;
}

double propagator_deviation(const PropagatorBlocks& a, const PropagatorBlocks& b, int max_photon) {
  if (a.fock_dim != b.fock_dim) throw std::invalid_argument("propagator_deviation: Fock dimension mismatch");
  const int m = std::min(max_photon + 1, a.fock_dim);
  double dev = 0.0;
  for (std::size_t k = 0; k < a.blocks.size(); ++k)
    dev = std::max(dev, (a.blocks[k] - b.blocks[k]).topLeftCorner(m, m).cwiseAbs().maxCoeff());
  return dev;
}

}  // namespace boundfuel
