#pragma once

#include <stdexcept>

namespace boundfuel {

/// A physical parameter or state lies outside the domain where the requested
/// quantity exists (e.g. a pump above the maser threshold). The CLI maps this
/// to exit code 2.
class PhysicsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine could not honour its accuracy contract (integrator
/// step too large, Fock truncation too small, no convergence in budget).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boundfuel
