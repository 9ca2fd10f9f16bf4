#pragma once

#include <array>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

/// Scalars that summarize an atomic cluster as a pump for the cavity.
/// For qutrit pairs r_g holds r_d.
struct PumpCoefficients {
  Complex lambda{0.0, 0.0};  // coherences between states one excitation apart
  Complex xi{0.0, 0.0};      // coherences two or more excitations apart
  double r_e = 0.0;
  double r_g = 0.0;
  double C = 0.0;
  double delta = 0.0;  // r_g - r_e
  double R = 0.0;      // r_e + r_g - 2C
  bool qutrit = false;

  bool heat_exchange_only(double tol = 1e-9) const { return std::abs(lambda) <= tol && std::abs(xi) <= tol; }
};

/// Position of the k-th (0-based) element of the pump-table ordering in the
/// computational basis: e^4, the four 3-excitation states, the six 2-excitation
/// states (complementary pairs on the block anti-diagonal), the four 1-excitation
/// states, g^4.
const std::array<int, 16>& pump_order();

/// Element a_{kl} (1-based pump-table indices) of a 16x16 computational-basis matrix.
Complex pump_element(const Matrix& rho, int k, int l);

PumpCoefficients pump_coefficients_4qubit(const DensityMatrix& rho);

/// Sums for a qutrit pair in the basis (ee,eu,eg,ue,uu,ug,ge,gu,gg).
PumpCoefficients pump_coefficients_qutrit(const DensityMatrix& rho);

/// Closed forms quoted for the Horodecki family: lambda = 4/21,
/// r_e = (14 - alpha)/21, r_d = (28 - alpha)/21, xi = 0.
PumpCoefficients horodecki_coefficients_closed_form(double alpha);

}  // namespace boundfuel
