#include "boundfuel/micromaser/collision.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

namespace {

int excitations(int atom_index, int n_atoms) {
  int k = 0;
  for (int q = 0; q < n_atoms; ++q) k += ((atom_index >> q) & 1) == 0;
  return k;
}

}  // namespace

Matrix tavis_cummings_interaction(int n_atoms, int fock_dim, double g) {
  const int na = 1 << n_atoms;
  const int d = na * fock_dim;
  Matrix h = Matrix::Zero(d, d);
  for (int i = 0; i < na; ++i) {
    for (int q = 0; q < n_atoms; ++q) {
      const int bit = 1 << (n_atoms - 1 - q);
      if (i & bit) continue;  // qubit q already in g
      const int j = i | bit;  // same with qubit q in g
      // a^dag s^-: |i, m> -> |j, m+1>
      for (int m = 0; m + 1 < fock_dim; ++m) {
        const double amp = g * std::sqrt(static_cast<double>(m + 1));
        h(j * fock_dim + m + 1, i * fock_dim + m) += amp;
        h(i * fock_dim + m, j * fock_dim + m + 1) += amp;
      }
    }
  }
  return h;
}

SparseMatrix collision_superoperator(const DensityMatrix& rho_a, const Matrix& u, int fock_dim) {
  const int na = rho_a.dimension();
  int n_atoms = 0;
  while ((1 << n_atoms) < na) ++n_atoms;
  if ((1 << n_atoms) != na || u.rows() != na * fock_dim) throw std::invalid_argument("collision_superoperator: shape");
  const int f = fock_dim;
  const Matrix& a = rho_a.matrix();
  std::vector<int> exc(static_cast<std::size_t>(na));
  for (int i = 0; i < na; ++i) exc[static_cast<std::size_t>(i)] = excitations(i, n_atoms);

  // coefficient of |m'><m| in the block U_{n i}; m' is fixed by excitation number
  auto block = [&](int n, int i, int m, int& mp) -> Complex {
    mp = m + exc[static_cast<std::size_t>(i)] - exc[static_cast<std::size_t>(n)];
    if (mp < 0 || mp >= f) return 0.0;
    return u(n * f + mp, i * f + m);
  };

  SparseMatrix s(f * f, f * f);
  std::vector<Eigen::Triplet<Complex>> t;
  for (int n = 0; n < na; ++n) {
    t.clear();
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < na; ++j) {
        const Complex aij = a(i, j);
        if (std::abs(aij) < 1e-15) continue;
        for (int m1 = 0; m1 < f; ++m1) {
          int p1 = 0;
          const Complex c1 = block(n, i, m1, p1);
          if (std::abs(c1) < 1e-16) continue;
          for (int m2 = 0; m2 < f; ++m2) {
            int p2 = 0;
            const Complex c2 = block(n, j, m2, p2);
            if (std::abs(c2) < 1e-16) continue;
            // (U_ni rho U_nj^dag)_{p1 p2} += a_ij c1 rho_{m1 m2} conj(c2); column-major vec
            t.emplace_back(p2 * f + p1, m2 * f + m1, aij * c1 * std::conj(c2));
          }
        }
      }
    }
    SparseMatrix part(f * f, f * f);
    part.setFromTriplets(t.begin(), t.end());
    s += part;
  }
  s.prune(Complex(0.0), 1e-18);
  return s;
}

CollisionResult collision_simulate(const DensityMatrix& rho_a, const CavityConfig& cav, const CollisionOptions& opt) {
  if (!(opt.g_tau > 0.0 && opt.g_tau <= 0.2)) throw PhysicsError("collision_simulate: need 0 < g tau <= 0.2");
  if (!(opt.p_dt >= 0.0 && opt.p_dt <= 1.0)) throw PhysicsError("collision_simulate: p_dt must lie in [0, 1]");
  const int f = opt.fock_dim;
  int n_atoms = 0;
  while ((1 << n_atoms) < rho_a.dimension()) ++n_atoms;
  const Matrix h = tavis_cummings_interaction(n_atoms, f, 1.0);
  const Matrix u = matrix_exp_unitary(h, opt.g_tau);
  SparseMatrix id(f * f, f * f);
  id.setIdentity();
  const SparseMatrix s = collision_superoperator(rho_a, u, f);

  // loss per unit collision rate: kappa/p = (kappa/mu) (g tau)^2
  const double kp = cav.kappa_over_mu * opt.g_tau * opt.g_tau;
  const SparseMatrix loss = cavity_liouvillian(f, 0.5 * kp * cav.nbar_th, 0.5 * kp * (cav.nbar_th + 1.0));
  const SparseMatrix gen = (s - id + loss).eval();

  CollisionResult r{};
  r.stationary = stationary_state(gen, f);
  r.stationary_analysis = analyse_cavity_state(r.stationary);
  r.stationary_kelvin = r.stationary_analysis.temperature_units * cav.scale_kelvin();

  // environment thermal start
  const double x = cav.nbar_th / (1.0 + cav.nbar_th);
  Matrix rho0 = Matrix::Zero(f, f);
  double z = 0.0;
  for (int m = 0; m < f; ++m) z += std::pow(x, m);
  for (int m = 0; m < f; ++m) rho0(m, m) = std::pow(x, m) / z;
  Vector v = vec(rho0);

  const SparseMatrix loss_step = (opt.p_dt * loss).eval();
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vector acc = Vector::Zero(v.size());
  long acc_count = 0;
  double last_t = analyse_cavity_state(rho0).temperature_units;
  r.converged = false;
  long step = 0;
  const SparseMatrix mix = (id + opt.p_dt * (s - id)).eval();
  while (step < opt.max_steps) {
    ++step;
    if (opt.monte_carlo) {
      if (uni(rng) < opt.p_dt) v = s * v;
      v += loss_step * v;
      if (step > opt.max_steps / 2) {
        acc += v;
        ++acc_count;
      }
    } else {
      Vector next = mix * v;
      next += loss_step * v;
      v.swap(next);
    }
    if (step % opt.check_every == 0) {
      const double tnow = analyse_cavity_state(unvec(v, f)).temperature_units;
      r.sample_steps.push_back(static_cast<double>(step));
      r.sample_temperature.push_back(tnow);
      if (!opt.monte_carlo && std::abs(tnow - last_t) <= opt.rel_tol * std::abs(tnow)) {
        r.converged = true;
        break;
      }
      last_t = tnow;
    }
  }
  r.steps_taken = step;
  if (opt.monte_carlo) {
    r.converged = acc_count > 0;
    v = acc / static_cast<double>(std::max<long>(acc_count, 1));
  } else if (!r.converged) {
    throw NumericalError("collision_simulate: no convergence within the step budget");
  }
  Matrix rho = unvec(v, f);
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  r.rho = rho;
  r.analysis = analyse_cavity_state(rho);
  r.kelvin = r.analysis.temperature_units * cav.scale_kelvin();
  return r;
}

}  // namespace boundfuel
