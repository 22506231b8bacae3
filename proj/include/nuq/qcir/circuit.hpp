#pragma once

#include <map>
#include <string>
#include <vector>

#include "nuq/qcir/gate.hpp"

namespace nuq::qcir {

/// Ordered gate list over a mixed-radix register. `layout[l]` is the wire
/// that holds logical wire l once the circuit has run (identity unless a
/// builder ends with its wires permuted).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(Dims dims, std::string label = {});

  const Dims& dims() const { return dims_; }
  int num_wires() const { return static_cast<int>(dims_.size()); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::string& label() const { return label_; }
  void set_label(std::string s) { label_ = std::move(s); }
  const std::vector<int>& layout() const { return layout_; }
  void set_layout(std::vector<int> layout);
  bool identity_layout() const;

  Circuit& add(GateKind k, std::vector<int> wires, std::vector<double> params = {});
  Circuit& add(Gate g);

  /// Append `sub`, whose wire w stands for logical wire logical[w] of this
  /// circuit. Gates land on the wires currently holding those logical
  /// wires, and sub's own layout is folded into ours.
  Circuit& append(const Circuit& sub, std::span<const int> logical);
  /// Same, with sub covering all wires in order.
  Circuit& append(const Circuit& sub);

  /// Reversed list of adjoint gates. The layout is not carried over.
  Circuit inverse_gates() const;

 private:
  Dims dims_;
  std::vector<Gate> gates_;
  std::string label_;
  std::vector<int> layout_;
};

/// Unitary of the gate list, first gate acting first.
Matrix densify(const Circuit& c, std::size_t cap = 4096);
/// Densified unitary followed by the wire permutation that puts every
/// logical wire back in its own position.
Matrix densify_logical(const Circuit& c, std::size_t cap = 4096);

struct Connectivity {
  enum class Kind { AllToAll, TShape } kind = Kind::AllToAll;
  int center = 0;

  static Connectivity all_to_all() { return {}; }
  static Connectivity t_shape(int c = 0) { return {Kind::TShape, c}; }
  bool allows(int a, int b) const { return kind == Kind::AllToAll || a == center || b == center; }
};

std::string to_string(const Connectivity& c);
Connectivity connectivity_from_string(const std::string& s);

/// Throws ConstructionError naming the first offending gate.
void check_connectivity(const Circuit& c, const Connectivity& conn);

std::map<std::string, int> gate_counts(const Circuit& c);

}  // namespace nuq::qcir
