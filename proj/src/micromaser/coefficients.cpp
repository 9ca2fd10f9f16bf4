#include "boundfuel/micromaser/coefficients.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boundfuel/core/errors.hpp"

namespace boundfuel {

const std::array<int, 16>& pump_order() {
  // 1-based: 1 2 3 5 9 10 11 13 4 6 7 8 12 14 15 16
  static const std::array<int, 16> order{0, 1, 2, 4, 8, 9, 10, 12, 3, 5, 6, 7, 11, 13, 14, 15};
  return order;
}

Complex pump_element(const Matrix& rho, int k, int l) {
  const auto& o = pump_order();
  return rho(o[static_cast<std::size_t>(k - 1)], o[static_cast<std::size_t>(l - 1)]);
}

namespace {

using Pair = std::pair<int, int>;

const std::vector<Pair>& lambda_terms() {
  static const std::vector<Pair> t{
      {1, 2},   {1, 3},   {1, 4},   {1, 5},   {2, 6},   {2, 9},   {2, 10},  {3, 7},
      {3, 9},   {3, 11},  {4, 8},   {4, 10},  {4, 11},  {5, 6},   {5, 7},   {5, 8},
      {6, 13},  {6, 14},  {7, 13},  {7, 15},  {8, 14},  {8, 15},  {9, 12},  {9, 13},
      {10, 12}, {10, 14}, {11, 12}, {11, 15}, {12, 16}, {13, 16}, {14, 16}, {15, 16}};
  return t;
}

const std::vector<Pair>& xi_terms() {
  static const std::vector<Pair> t{
      {1, 6},  {1, 7},  {1, 8},  {1, 9},  {1, 10},  {1, 11},  {2, 12},  {2, 13},
      {2, 14}, {3, 12}, {3, 13}, {3, 15}, {4, 12},  {4, 14},  {4, 15},  {5, 13},
      {5, 14}, {5, 15}, {6, 16}, {7, 16}, {8, 16},  {9, 16},  {10, 16}, {11, 16}};
  return t;
}

// Off-diagonal sum over a contiguous 1-based block.
double block_offdiag(const Matrix& rho, int lo, int hi) {
  double s = 0.0;
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      if (i != j) s += pump_element(rho, i, j).real();
  return s;
}

double diag_sum(const Matrix& rho, int lo, int hi) {
  double s = 0.0;
  for (int i = lo; i <= hi; ++i) s += pump_element(rho, i, i).real();
  return s;
}

}  // namespace

PumpCoefficients pump_coefficients_4qubit(const DensityMatrix& rho) {
  if (rho.dimension() != 16) throw std::invalid_argument("pump_coefficients_4qubit: expects a 16-dim state");
  const Matrix& a = rho.matrix();
  PumpCoefficients c;
  for (const auto& [i, j] : lambda_terms()) c.lambda += pump_element(a, i, j);
  for (const auto& [i, j] : xi_terms()) c.xi += pump_element(a, i, j);

  const double d_e = diag_sum(a, 2, 5);
  const double d_d = diag_sum(a, 6, 11);
  const double d_w = diag_sum(a, 12, 15);
  double anti = 0.0;  // anti-diagonal of the 2-excitation block
  for (int i = 6; i <= 11; ++i) anti += pump_element(a, i, 17 - i).real();
  const double c_e = block_offdiag(a, 2, 5);
  const double c_d = block_offdiag(a, 6, 11) - anti;
  const double c_w = block_offdiag(a, 12, 15);
  c.C = c_e + c_d + c_w;
  c.r_e = 4.0 * pump_element(a, 1, 1).real() + 3.0 * d_e + 2.0 * d_d + d_w + c.C;
  c.r_g = 4.0 * pump_element(a, 16, 16).real() + 3.0 * d_w + 2.0 * d_d + d_e + c.C;
  c.delta = c.r_g - c.r_e;
  c.R = c.r_e + c.r_g - 2.0 * c.C;
  return c;
}

PumpCoefficients pump_coefficients_qutrit(const DensityMatrix& rho) {
  if (rho.dimension() != 9) throw std::invalid_argument("pump_coefficients_qutrit: expects a 9-dim state");
  const Matrix& m = rho.matrix();
  auto a = [&](int i, int j) { return m(i - 1, j - 1); };
  PumpCoefficients c;
  c.qutrit = true;
  const double s2 = std::sqrt(2.0);
  for (int j = 2; j <= 5; ++j) c.lambda += a(1, j) / s2;
  for (int i = 2; i <= 5; ++i)
    for (int j = 6; j <= 9; ++j) c.lambda += a(i, j) / (2.0 * s2);
  for (int j = 6; j <= 9; ++j) c.xi += 0.5 * a(1, j);

  double shared = 0.0;
  for (int i = 2; i <= 3; ++i)
    for (int j = 2; j <= 3; ++j) shared += a(i, j).real();
  for (int i = 4; i <= 5; ++i)
    for (int j = 4; j <= 5; ++j) shared += a(i, j).real();
  for (int i = 4; i <= 5; ++i)
    for (int j = 2; j <= 3; ++j) shared += (a(i, j) + a(j, i)).real();
  double low = 0.0;
  for (int i = 6; i <= 9; ++i)
    for (int j = 6; j <= 9; ++j) low += a(i, j).real();
  c.r_e = 0.5 * (4.0 * a(1, 1).real() + shared);
  c.r_g = 0.5 * (low + shared);
  c.delta = c.r_g - c.r_e;
  c.R = c.r_e + c.r_g;
  return c;
}

PumpCoefficients horodecki_coefficients_closed_form(double alpha) {
  if (!(alpha >= 2.0 && alpha <= 5.0)) throw PhysicsError("horodecki coefficients: alpha must lie in [2, 5]");
  PumpCoefficients c;
  c.qutrit = true;
  c.lambda = 4.0 / 21.0;
  c.r_e = (14.0 - alpha) / 21.0;
  c.r_g = (28.0 - alpha) / 21.0;
  c.delta = c.r_g - c.r_e;
  c.R = c.r_e + c.r_g;
  return c;
}

}  // namespace boundfuel
