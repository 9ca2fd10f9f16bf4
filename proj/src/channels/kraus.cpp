#include "boundfuel/channels/kraus.hpp"

#include <cmath>
#include <stdexcept>

#include "boundfuel/core/errors.hpp"
#include "boundfuel/core/linalg.hpp"

namespace boundfuel {

KrausChannel::KrausChannel(std::vector<Matrix> ops, const Tolerances& tol) : ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  dim_ = static_cast<int>(ops_.front().rows());
  for (const auto& m : ops_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("KrausChannel: operator shape mismatch");
  if (completeness_defect() > tol.kraus) throw std::invalid_argument("KrausChannel: operators are not trace preserving");
}

double KrausChannel::completeness_defect() const {
  Matrix s = Matrix::Zero(dim_, dim_);
  for (const auto& m : ops_) s += m.adjoint() * m;
  return (s - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
}

Matrix KrausChannel::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& m : ops_) out += m * rho * m.adjoint();
  return out;
}

KrausChannel gadc(double nbar, double p) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw PhysicsError("gadc: nbar must be finite and >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw PhysicsError("gadc: p must lie in [0, 1]");
  const double a = (nbar + 1.0) / (2.0 * nbar + 1.0);
  const double b = nbar / (2.0 * nbar + 1.0);
  const double q = std::sqrt(1.0 - p);
  std::vector<Matrix> ops(4, Matrix::Zero(2, 2));
  ops[0](0, 0) = std::sqrt(a) * q;
  ops[0](1, 1) = std::sqrt(a);
  ops[1](0, 0) = std::sqrt(b);
  ops[1](1, 1) = std::sqrt(b) * q;
  ops[2](1, 0) = std::sqrt(a * p);
  ops[3](0, 1) = std::sqrt(b * p);
  KrausChannel ch(std::move(ops));
  ch.p = p;
  ch.nbar = nbar;
  return ch;
}

double gadc_strength(double gamma, double t_tr, double nbar) {
  if (gamma < 0.0 || t_tr < 0.0 || nbar < 0.0) throw PhysicsError("gadc_strength: negative argument");
  return -std::expm1(-gamma * t_tr * (1.0 + 2.0 * nbar) / 2.0);
}

KrausChannel identity_channel(int dim) { return KrausChannel({Matrix::Identity(dim, dim)}); }

KrausChannel complete_dephasing(int dim) {
  std::vector<Matrix> ops;
  for (int k = 0; k < dim; ++k) {
    Matrix m = Matrix::Zero(dim, dim);
    m(k, k) = 1.0;
    ops.push_back(m);
  }
  return KrausChannel(std::move(ops));
}

DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, int factor) {
  const HilbertSpace& space = rho.space();
  if (space.factor_dim(factor) != channel.dimension())
    throw std::invalid_argument("apply_local: channel dimension does not match factor");
  Matrix out = Matrix::Zero(rho.dimension(), rho.dimension());
  for (const auto& m : channel.operators()) {
    const Matrix e = embed(m, space, factor);
    out += e * rho.matrix() * e.adjoint();
  }
  Tolerances cptp;
  cptp.trace = 1e-9;
  cptp.positivity = 1e-9;
  cptp.hermitian = 1e-9;
  return DensityMatrix(space, out, cptp);
}

DensityMatrix apply_all(const KrausChannel& channel, const DensityMatrix& rho) {
  DensityMatrix out = rho;
  for (int f = 0; f < rho.space().num_factors(); ++f) out = apply_local(channel, out, f);
  return out;
}

}  // namespace boundfuel
