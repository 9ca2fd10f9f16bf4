#include "boundfuel/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace boundfuel {

namespace {

// digit table: row = flat index, column = factor
std::vector<std::vector<int>> digit_table(const HilbertSpace& space) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(space.dimension()));
  for (int i = 0; i < space.dimension(); ++i) t[static_cast<std::size_t>(i)] = space.digits(i);
  return t;
}

void check_factors(const HilbertSpace& space, std::span<const int> factors, const char* who) {
  std::vector<bool> seen(static_cast<std::size_t>(space.num_factors()), false);
  for (int f : factors) {
    if (f < 0 || f >= space.num_factors()) throw std::invalid_argument(std::string(who) + ": bad factor index");
    if (seen[static_cast<std::size_t>(f)]) throw std::invalid_argument(std::string(who) + ": repeated factor");
    seen[static_cast<std::size_t>(f)] = true;
  }
}

template <class T>
HilbertSpace joint_space(std::span<const T> factors) {
  HilbertSpace s = factors.front().space();
  for (std::size_t i = 1; i < factors.size(); ++i) s = s * factors[i].space();
  return s;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor: empty list");
  Matrix m = factors.front().matrix();
  for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i].matrix());
  Tolerances loose;
  loose.trace = 1e-9;
  return DensityMatrix(joint_space(factors), m, loose);
}

DensityMatrix tensor(std::initializer_list<DensityMatrix> factors) {
  return tensor(std::span<const DensityMatrix>(factors.begin(), factors.size()));
}

HermitianOperator tensor(std::span<const HermitianOperator> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor: empty list");
  Matrix m = factors.front().matrix();
  for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i].matrix());
  return HermitianOperator(joint_space(factors), m);
}

HermitianOperator tensor(std::initializer_list<HermitianOperator> factors) {
  return tensor(std::span<const HermitianOperator>(factors.begin(), factors.size()));
}

Matrix embed(const Matrix& local, const HilbertSpace& space, int factor) {
  const int d = space.factor_dim(factor);
  if (local.rows() != d || local.cols() != d) throw std::invalid_argument("embed: local dimension mismatch");
  int left = 1, right = 1;
  for (int f = 0; f < factor; ++f) left *= space.factor_dim(f);
  for (int f = factor + 1; f < space.num_factors(); ++f) right *= space.factor_dim(f);
  return kron(kron(Matrix::Identity(left, left), local), Matrix::Identity(right, right));
}

Matrix partial_trace(const Matrix& a, const HilbertSpace& space, std::span<const int> keep) {
  if (a.rows() != space.dimension() || a.cols() != space.dimension())
    throw std::invalid_argument("partial_trace: shape mismatch");
  check_factors(space, keep, "partial_trace");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<int> traced;
  for (int f = 0; f < space.num_factors(); ++f)
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
  if (kept.empty()) {
    Matrix out(1, 1);
    out(0, 0) = a.trace();
    return out;
  }
  const HilbertSpace ks = space.select(kept);
  const auto digits = digit_table(space);
  const int n = space.dimension();
  std::vector<int> kidx(static_cast<std::size_t>(n)), tidx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int k = 0, t = 0;
    const auto& dg = digits[static_cast<std::size_t>(i)];
    for (int f : kept) k = k * space.factor_dim(f) + dg[static_cast<std::size_t>(f)];
    for (int f : traced) t = t * space.factor_dim(f) + dg[static_cast<std::size_t>(f)];
    kidx[static_cast<std::size_t>(i)] = k;
    tidx[static_cast<std::size_t>(i)] = t;
  }
  Matrix out = Matrix::Zero(ks.dimension(), ks.dimension());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (tidx[static_cast<std::size_t>(i)] == tidx[static_cast<std::size_t>(j)])
        out(kidx[static_cast<std::size_t>(i)], kidx[static_cast<std::size_t>(j)]) += a(i, j);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  Tolerances loose;
  loose.trace = 1e-9;
  loose.positivity = 1e-9;
  return DensityMatrix(rho.space().select(kept), partial_trace(rho.matrix(), rho.space(), keep), loose);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

Matrix permute_factors(const Matrix& a, const HilbertSpace& space, std::span<const int> order) {
  if (static_cast<int>(order.size()) != space.num_factors())
    throw std::invalid_argument("permute_factors: order must list every factor");
  check_factors(space, order, "permute_factors");
  const HilbertSpace ps = space.select(order);
  const int n = space.dimension();
  std::vector<int> map(static_cast<std::size_t>(n));
  std::vector<int> pd(order.size());
  for (int i = 0; i < n; ++i) {
    const auto dg = space.digits(i);
    for (std::size_t k = 0; k < order.size(); ++k) pd[k] = dg[static_cast<std::size_t>(order[k])];
    map[static_cast<std::size_t>(i)] = ps.flat_index(pd);
  }
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = a(i, j);
  return out;
}

Bipartition Bipartition::last_of(const HilbertSpace& space, int count) {
  Bipartition b;
  for (int f = space.num_factors() - count; f < space.num_factors(); ++f) b.second.push_back(f);
  return b;
}

void Bipartition::validate(const HilbertSpace& space) const {
  if (second.empty() || static_cast<int>(second.size()) >= space.num_factors())
    throw std::invalid_argument("Bipartition: block B must be a nonempty proper subset");
  check_factors(space, second, "Bipartition");
}

std::vector<int> Bipartition::first(const HilbertSpace& space) const {
  std::vector<int> out;
  for (int f = 0; f < space.num_factors(); ++f)
    if (std::find(second.begin(), second.end(), f) == second.end()) out.push_back(f);
  return out;
}

Matrix partial_transpose(const Matrix& a, const HilbertSpace& space, const Bipartition& cut) {
  cut.validate(space);
  if (a.rows() != space.dimension() || a.cols() != space.dimension())
    throw std::invalid_argument("partial_transpose: shape mismatch");
  const int n = space.dimension();
  const auto digits = digit_table(space);
  std::vector<bool> in_b(static_cast<std::size_t>(space.num_factors()), false);
  for (int f : cut.second) in_b[static_cast<std::size_t>(f)] = true;
  Matrix out(n, n);
  std::vector<int> ri, ci;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ri = digits[static_cast<std::size_t>(i)];
      ci = digits[static_cast<std::size_t>(j)];
      for (std::size_t f = 0; f < in_b.size(); ++f)
        if (in_b[f]) std::swap(ri[f], ci[f]);
      out(space.flat_index(ri), space.flat_index(ci)) = a(i, j);
    }
  }
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
  return partial_transpose(rho.matrix(), rho.space(), cut);
}

Matrix SpectralDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

std::vector<EigenBlock> SpectralDecomposition::degeneracies(double tol) const {
  std::vector<EigenBlock> out;
  for (int i = 0; i < values.size(); ++i) {
    if (!out.empty() && std::abs(values(i) - values(out.back().first)) <= tol) {
      ++out.back().multiplicity;
    } else {
      out.push_back({values(i), i, 1});
    }
  }
  for (auto& b : out) b.value = values.segment(b.first, b.multiplicity).mean();
  return out;
}

SpectralDecomposition eig_hermitian(const Matrix& a, SortOrder order, const Tolerances& tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_hermitian: not square");
  const double defect = max_hermiticity_defect(a);
  if (defect > tol.hermitian) throw std::invalid_argument("eig_hermitian: input is not Hermitian");
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver failed");
  SpectralDecomposition sd{es.eigenvalues(), es.eigenvectors(), SortOrder::ascending};
  if (order == SortOrder::descending) {
    sd.values = sd.values.reverse().eval();
    sd.vectors = sd.vectors.rowwise().reverse().eval();
    sd.order = SortOrder::descending;
  }
  return sd;
}

SpectralDecomposition eig_hermitian(const HermitianOperator& h, SortOrder order) {
  return eig_hermitian(h.matrix(), order);
}

RealVector eigenvalues_hermitian(const Matrix& a) {
  const Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double trace_norm(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix matrix_exp_unitary(const Matrix& h, double t, const Tolerances& tol) {
  const auto sd = eig_hermitian(h, SortOrder::ascending, tol);
  Vector phases(sd.values.size());
  for (int i = 0; i < sd.values.size(); ++i) phases(i) = std::exp(-kI * (sd.values(i) * t));
  Matrix u = sd.vectors * phases.asDiagonal() * sd.vectors.adjoint();
  if (unitarity_defect(u) > tol.unitary) throw std::runtime_error("matrix_exp_unitary: result not unitary");
  return u;
}

Matrix matrix_exp_unitary(const HermitianOperator& h, double t, const Tolerances& tol) {
  return matrix_exp_unitary(h.matrix(), t, tol);
}

}  // namespace boundfuel
