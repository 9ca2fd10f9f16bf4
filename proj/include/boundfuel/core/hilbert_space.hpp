#pragma once

#include <span>
#include <string>
#include <vector>

namespace boundfuel {

/// Ordered tensor product of finite local spaces. The first factor is the
/// most significant digit of the flat index (row-major Kronecker convention).
class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<int> dims, std::vector<std::string> labels = {});

  static HilbertSpace qubits(int count);
  static HilbertSpace qutrits(int count);

  int dimension() const noexcept { return dimension_; }
  int num_factors() const noexcept { return static_cast<int>(dims_.size()); }
  int factor_dim(int factor) const;
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::string& label(int factor) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Subsystem made of the listed factors, in the listed order.
  HilbertSpace select(std::span<const int> factors) const;

  /// Local digits of a flat index, one per factor.
  std::vector<int> digits(int flat_index) const;
  int flat_index(std::span<const int> digits) const;

  /// Shapes compare equal when the factor dimensions agree; labels are cosmetic.
  friend bool operator==(const HilbertSpace& a, const HilbertSpace& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<std::string> labels_;
  int dimension_ = 1;
};

/// Concatenation of factor lists.
HilbertSpace operator*(const HilbertSpace& a, const HilbertSpace& b);

}  // namespace boundfuel
