#pragma once

namespace boundfuel {

// Every validating routine takes one of these; defaults are the library-wide
// contract. Config files may override individual fields.
struct Tolerances {
  double hermitian = 1e-10;   // max |A - A^dagger| elementwise
  double trace = 1e-10;       // |Tr rho - 1|
  double positivity = 1e-10;  // min eigenvalue >= -positivity
  double spectral = 1e-9;     // eigen reconstruction / orthonormality
  double unitary = 1e-9;      // max |U^dagger U - I|
  double kraus = 1e-10;       // max |sum M^dagger M - I|
};

}  // namespace boundfuel
