#pragma once

#include <limits>
#include <vector>

#include "boundfuel/core/operators.hpp"

namespace boundfuel {

/// CPTP map on one local factor given by its Kraus operators.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops, const Tolerances& tol = {});

  int dimension() const noexcept { return dim_; }
  const std::vector<Matrix>& operators() const noexcept { return ops_; }
  /// max |sum M^dagger M - I|
  double completeness_defect() const;
  Matrix apply(const Matrix& rho) const;

  // Set by gadc(); NaN otherwise.
  double p = std::numeric_limits<double>::quiet_NaN();
  double nbar = std::numeric_limits<double>::quiet_NaN();

 private:
  std::vector<Matrix> ops_;
  int dim_;
};

/// Generalized amplitude damping in the (e, g) basis:
///   M0 = sqrt(a)(|g><g| + sqrt(1-p)|e><e|), M1 = sqrt(b)(sqrt(1-p)|g><g| + |e><e|),
///   M2 = sqrt(a p)|g><e|, M3 = sqrt(b p)|e><g|,  a = (n+1)/(2n+1), b = n/(2n+1).
KrausChannel gadc(double nbar, double p);

/// p = 1 - exp(-gamma t_tr (1 + 2 nbar) / 2); gamma is an angular rate in 1/s, t_tr in s.
double gadc_strength(double gamma, double t_tr, double nbar);

KrausChannel identity_channel(int dim);
KrausChannel complete_dephasing(int dim);

DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, int factor);
/// Same channel on every factor.
DensityMatrix apply_all(const KrausChannel& channel, const DensityMatrix& rho);

}  // namespace boundfuel
