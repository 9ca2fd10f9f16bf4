#pragma once

#include <vector>

#include "boundfuel/core/operators.hpp"
#include "boundfuel/io/curve.hpp"

namespace boundfuel {

struct ErgotropyResult {
  double W;
  double E_initial;
  double E_final;
  DensityMatrix passive_state;
};

/// Maximum work extractable by a unitary: pairs the eigenvalues of rho in
/// descending order with the energies in ascending order.
ErgotropyResult ergotropy(const DensityMatrix& rho, const HermitianOperator& h);

/// U = sum_j |e_j><r_j|; U rho U^dagger is the passive state.
Matrix optimal_unitary(const DensityMatrix& rho, const HermitianOperator& h);

// Closed forms quoted for the two families (units of omega).
double fls_ergotropy_formula(double eps);
double horodecki_ergotropy_printed(double alpha);

/// Columns: W (numerical), W_formula, abs_error.
CurveOutput ergotropy_curve_fls(const std::vector<double>& eps_grid);

/// Columns: W, W_printed, abs_error, branch. Branches are evaluated on [2, 2.5) and [2.5, 5];
/// the printed branches disagree at 2.5 and metadata records both values.
CurveOutput ergotropy_curve_horodecki(const std::vector<double>& alpha_grid);

/// Two-qutrit amplitude damping with rates gamma_e, gamma_u sampled at the given
/// times. Columns: ergotropy, negativity, min_pt_eigenvalue, realignment.
CurveOutput ergotropy_dynamics(const DensityMatrix& rho0, double gamma_e, double gamma_u,
                               const std::vector<double>& times, double dt = 0.0);

}  // namespace boundfuel
