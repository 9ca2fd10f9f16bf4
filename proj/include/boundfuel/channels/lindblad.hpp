#pragma once

#include <vector>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

/// d rho/dt = -i[H, rho] + sum_k (L_k rho L_k^dagger - {L_k^dagger L_k, rho}/2).
/// Jump operators carry the square root of their rate.
class LindbladGenerator {
 public:
  LindbladGenerator(HilbertSpace space, Matrix hamiltonian, std::vector<Matrix> jumps);

  /// Local decay |g><e| at gamma_e and |g><u| at gamma_u on each qutrit of a pair.
  static LindbladGenerator qutrit_amplitude_damping(double gamma_e, double gamma_u);

  const HilbertSpace& space() const noexcept { return space_; }
  Matrix apply(const Matrix& rho) const;
  /// Fastest rate in the generator; sets the default step.
  double max_rate() const noexcept { return max_rate_; }

 private:
  HilbertSpace space_;
  Matrix hamiltonian_;
  std::vector<Matrix> jumps_;
  Matrix anti_;  // sum L^dagger L / 2
  double max_rate_ = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

/// Fixed-step RK4. dt <= 0 selects 1e-3 / max_rate. Samples every `stride` steps and at t_end;
/// each sample must satisfy the density-matrix invariants at 1e-7.
Trajectory lindblad_integrate(const DensityMatrix& rho0, const LindbladGenerator& gen, double t_end,
                              double dt = 0.0, int stride = 10);

/// States at the requested increasing times, each reached with steps no longer than dt.
std::vector<DensityMatrix> lindblad_sample(const DensityMatrix& rho0, const LindbladGenerator& gen,
                                           const std::vector<double>& times, double dt = 0.0);

/// One RK4 step on a raw matrix.
Matrix rk4_step(const LindbladGenerator& gen, const Matrix& rho, double dt);

}  // namespace boundfuel
