#include "boundfuel/states/entanglement.hpp"

#include <cmath>

namespace boundfuel {

double min_pt_eigenvalue(const DensityMatrix& rho, const Bipartition& cut) {
  return eigenvalues_hermitian(partial_transpose(rho, cut)).minCoeff();
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
  const RealVector ev = eigenvalues_hermitian(partial_transpose(rho, cut));
  double n = 0.0;
  for (double v : ev)
    if (v < 0.0) n -= v;
  return n < 1e-12 ? 0.0 : n;
}

Matrix realign(const DensityMatrix& rho, const Bipartition& cut) {
  const HilbertSpace& space = rho.space();
  cut.validate(space);
  std::vector<int> order = cut.first(space);
  order.insert(order.end(), cut.second.begin(), cut.second.end());
  const Matrix p = permute_factors(rho.matrix(), space, order);
  int da = 1, db = 1;
  for (int f : cut.first(space)) da *= space.factor_dim(f);
  for (int f : cut.second) db *= space.factor_dim(f);
  Matrix r(da * da, db * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) r(i * da + k, j * db + l) = p(i * db + j, k * db + l);
  return r;
}

double realignment_parameter(const DensityMatrix& rho, const Bipartition& cut) {
  return trace_norm(realign(rho, cut)) - 1.0;
}

}  // namespace boundfuel
