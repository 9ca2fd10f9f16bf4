#include "boundfuel/core/hilbert_space.hpp"

#include <stdexcept>

namespace boundfuel {

HilbertSpace::HilbertSpace(std::vector<int> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw std::invalid_argument("HilbertSpace: no factors");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dims_.size(); ++i) labels_.push_back("f" + std::to_string(i));
  }
  if (labels_.size() != dims_.size()) throw std::invalid_argument("HilbertSpace: label count mismatch");
  for (int d : dims_) {
    if (d < 2) throw std::invalid_argument("HilbertSpace: factor dimension must be >= 2");
    dimension_ *= d;
  }
}

HilbertSpace HilbertSpace::qubits(int count) {
  static const char* names = "ABCDEFGHIJKLMNOP";
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.emplace_back(1, names[i % 16]);
  return HilbertSpace(std::vector<int>(static_cast<std::size_t>(count), 2), labels);
}

HilbertSpace HilbertSpace::qutrits(int count) {
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back(std::to_string(i + 1));
  return HilbertSpace(std::vector<int>(static_cast<std::size_t>(count), 3), labels);
}

int HilbertSpace::factor_dim(int factor) const {
  if (factor < 0 || factor >= num_factors()) throw std::out_of_range("HilbertSpace: bad factor index");
  return dims_[static_cast<std::size_t>(factor)];
}

const std::string& HilbertSpace::label(int factor) const {
  if (factor < 0 || factor >= num_factors()) throw std::out_of_range("HilbertSpace: bad factor index");
  return labels_[static_cast<std::size_t>(factor)];
}

HilbertSpace HilbertSpace::select(std::span<const int> factors) const {
  std::vector<int> dims;
  std::vector<std::string> labels;
  for (int f : factors) {
    dims.push_back(factor_dim(f));
    labels.push_back(label(f));
  }
  return HilbertSpace(std::move(dims), std::move(labels));
}

std::vector<int> HilbertSpace::digits(int flat_index) const {
  std::vector<int> out(dims_.size());
  for (int f = num_factors() - 1; f >= 0; --f) {
    const auto uf = static_cast<std::size_t>(f);
    out[uf] = flat_index % dims_[uf];
    flat_index /= dims_[uf];
  }
  return out;
}

int HilbertSpace::flat_index(std::span<const int> digits) const {
  int idx = 0;
  for (std::size_t f = 0; f < dims_.size(); ++f) idx = idx * dims_[f] + digits[f];
  return idx;
}

HilbertSpace operator*(const HilbertSpace& a, const HilbertSpace& b) {
  auto dims = a.dims();
  auto labels = a.labels();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return HilbertSpace(std::move(dims), std::move(labels));
}

}  // namespace boundfuel
