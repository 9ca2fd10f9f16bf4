#pragma once

#include <string>
#include <vector>

namespace boundfuel {

/// Computational index <-> energy label for n qubits, |e> = |0>, |g> = |1>.
/// Index 0 is the first label "ee..e"; the first qubit is the most significant bit.
class BasisMap {
 public:
  explicit BasisMap(int n_qubits);

  int n_qubits() const noexcept { return n_; }
  int dimension() const noexcept { return 1 << n_; }
  std::string label(int index) const;
  int index(const std::string& label) const;
  /// Number of excited qubits in the basis state.
  int excitations(int index) const;

 private:
  int n_;
};

/// Two-qutrit energy basis (ee,eu,eg,ue,uu,ug,ge,gu,gg); local level order e=0, u=1, g=2.
const std::vector<std::string>& qutrit_pair_labels();
int qutrit_pair_index(const std::string& label);

}  // namespace boundfuel
