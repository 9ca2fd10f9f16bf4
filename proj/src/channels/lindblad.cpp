#include "boundfuel/channels/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

LindbladGenerator::LindbladGenerator(HilbertSpace space, Matrix hamiltonian, std::vector<Matrix> jumps)
    : space_(std::move(space)), hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  const int d = space_.dimension();
  if (hamiltonian_.size() == 0) hamiltonian_ = Matrix::Zero(d, d);
  if (hamiltonian_.rows() != d || hamiltonian_.cols() != d)
    throw std::invalid_argument("LindbladGenerator: Hamiltonian shape mismatch");
  if (max_hermiticity_defect(hamiltonian_) > 1e-10)
    throw std::invalid_argument("LindbladGenerator: Hamiltonian not Hermitian");
  anti_ = Matrix::Zero(d, d);
  for (const auto& l : jumps_) {
    if (l.rows() != d || l.cols() != d) throw std::invalid_argument("LindbladGenerator: jump shape mismatch");
    const Matrix ll = l.adjoint() * l;
    anti_ += 0.5 * ll;
    max_rate_ = std::max(max_rate_, ll.cwiseAbs().maxCoeff());
  }
}

LindbladGenerator LindbladGenerator::qutrit_amplitude_damping(double gamma_e, double gamma_u) {
  if (gamma_e < 0.0 || gamma_u < 0.0) throw PhysicsError("qutrit_amplitude_damping: negative rate");
  const HilbertSpace space = HilbertSpace::qutrits(2);
  Matrix s_ge = Matrix::Zero(3, 3);
  s_ge(2, 0) = 1.0;  // |g><e|
  Matrix s_gu = Matrix::Zero(3, 3);
  s_gu(2, 1) = 1.0;  // |g><u|
  std::vector<Matrix> jumps;
  for (int q = 0; q < 2; ++q) {
    if (gamma_e > 0.0) jumps.push_back(std::sqrt(gamma_e) * embed(s_ge, space, q));
    if (gamma_u > 0.0) jumps.push_back(std::sqrt(gamma_u) * embed(s_gu, space, q));
  }
  return LindbladGenerator(space, Matrix(), std::move(jumps));
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
  Matrix out = -kI * (hamiltonian_ * rho - rho * hamiltonian_);
  out -= anti_ * rho + rho * anti_;
  for (const auto& l : jumps_) out += l * rho * l.adjoint();
  return out;
}

Matrix rk4_step(const LindbladGenerator& gen, const Matrix& rho, double dt) {
  const Matrix k1 = gen.apply(rho);
  const Matrix k2 = gen.apply(rho + 0.5 * dt * k1);
  const Matrix k3 = gen.apply(rho + 0.5 * dt * k2);
  const Matrix k4 = gen.apply(rho + dt * k3);
  return rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

namespace {

double default_dt(const LindbladGenerator& gen, double dt) {
  if (dt > 0.0) return dt;
  return gen.max_rate() > 0.0 ? 1e-3 / gen.max_rate() : 1e-3;
}

DensityMatrix checked_sample(const LindbladGenerator& gen, const Matrix& rho, double t) {
  Tolerances tol;
  tol.hermitian = tol.trace = tol.positivity = 1e-7;
  try {
    return DensityMatrix(gen.space(), rho, tol);
  } catch (const std::invalid_argument& e) {
    throw NumericalError("lindblad_integrate: invariant violated at t=" + std::to_string(t) +
                         " (step too large?): " + e.what());
  }
}

}  // namespace

Trajectory lindblad_integrate(const DensityMatrix& rho0, const LindbladGenerator& gen, double t_end, double dt,
                              int stride) {
  if (!(rho0.space() == gen.space())) throw std::invalid_argument("lindblad_integrate: space mismatch");
  if (t_end < 0.0) throw std::invalid_argument("lindblad_integrate: negative t_end");
  if (stride < 1) throw std::invalid_argument("lindblad_integrate: stride must be >= 1");
  dt = default_dt(gen, dt);
  const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  const double h = steps > 0 ? t_end / static_cast<double>(steps) : 0.0;
  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  Matrix rho = rho0.matrix();
  for (long s = 1; s <= steps; ++s) {
    rho = rk4_step(gen, rho, h);
    if (s % stride == 0 || s == steps) {
      const double t = h * static_cast<double>(s);
      traj.times.push_back(t);
      traj.states.push_back(checked_sample(gen, rho, t));
    }
  }
  return traj;
}

std::vector<DensityMatrix> lindblad_sample(const DensityMatrix& rho0, const LindbladGenerator& gen,
                                           const std::vector<double>& times, double dt) {
  if (!(rho0.space() == gen.space())) throw std::invalid_argument("lindblad_sample: space mismatch");
  dt = default_dt(gen, dt);
  std::vector<DensityMatrix> out;
  Matrix rho = rho0.matrix();
  double t = 0.0;
  for (double target : times) {
    if (target < t) throw std::invalid_argument("lindblad_sample: times must be non-decreasing and >= 0");
    const long steps = static_cast<long>(std::ceil((target - t) / dt - 1e-9));
    const double h = steps > 0 ? (target - t) / static_cast<double>(steps) : 0.0;
    for (long s = 0; s < steps; ++s) rho = rk4_step(gen, rho, h);
    t = target;
    out.push_back(checked_sample(gen, rho, t));
  }
  return out;
}

}  // namespace boundfuel
