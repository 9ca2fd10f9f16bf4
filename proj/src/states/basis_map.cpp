#include "boundfuel/states/basis_map.hpp"

#include <stdexcept>

namespace boundfuel {

BasisMap::BasisMap(int n_qubits) : n_(n_qubits) {
  if (n_ < 1 || n_ > 20) throw std::invalid_argument("BasisMap: qubit count out of range");
}

std::string BasisMap::label(int index) const {
  if (index < 0 || index >= dimension()) throw std::out_of_range("BasisMap: index out of range");
  std::string s(static_cast<std::size_t>(n_), 'e');
  for (int q = 0; q < n_; ++q)
    if ((index >> (n_ - 1 - q)) & 1) s[static_cast<std::size_t>(q)] = 'g';
  return s;
}

int BasisMap::index(const std::string& label) const {
  if (static_cast<int>(label.size()) != n_) throw std::invalid_argument("BasisMap: label length");
  int idx = 0;
  for (char c : label) {
    if (c != 'e' && c != 'g') throw std::invalid_argument("BasisMap: labels use e/g only");
    idx = 2 * idx + (c == 'g' ? 1 : 0);
  }
  return idx;
}

int BasisMap::excitations(int index) const {
  const std::string s = label(index);
  int k = 0;
  for (char c : s) k += (c == 'e');
  return k;
}

const std::vector<std::string>& qutrit_pair_labels() {
  static const std::vector<std::string> labels{"ee", "eu", "eg", "ue", "uu", "ug", "ge", "gu", "gg"};
  return labels;
}

int qutrit_pair_index(const std::string& label) {
  const auto& l = qutrit_pair_labels();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("qutrit_pair_index: unknown label " + label);
}

}  // namespace boundfuel
