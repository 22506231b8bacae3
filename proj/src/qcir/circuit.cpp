#include "nuq/qcir/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "nuq/errors.hpp"
#include "nuq/sim/kernels.hpp"

namespace nuq::qcir {

Circuit::Circuit(Dims dims, std::string label)
    : dims_(std::move(dims)), label_(std::move(label)), layout_(dims_.size()) {
  std::iota(layout_.begin(), layout_.end(), 0);
}

void Circuit::set_layout(std::vector<int> layout) {
  std::vector<int> sorted = layout;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) || sorted.size() != dims_.size())
      throw ConstructionError("layout is not a permutation of the wires");
  layout_ = std::move(layout);
}

bool Circuit::identity_layout() const {
  for (std::size_t i = 0; i < layout_.size(); ++i)
    if (layout_[i] != static_cast<int>(i)) return false;
  return true;
}

Circuit& Circuit::add(GateKind k, std::vector<int> wires, std::vector<double> params) {
  return add(Gate{k, std::move(wires), std::move(params)});
}

Circuit& Circuit::add(Gate g) {
  validate(g, dims_);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& sub, std::span<const int> logical) {
  if (static_cast<int>(logical.size()) != sub.num_wires())
    throw ConstructionError("append: wire map size does not match sub-circuit");
  std::vector<int> phys(logical.size());
  for (std::size_t w = 0; w < logical.size(); ++w) {
    if (logical[w] < 0 || logical[w] >= num_wires()) throw ConstructionError("append: wire out of range");
    phys[w] = layout_[logical[w]];
  }
  for (const Gate& g : sub.gates()) {
    Gate h = g;
    for (int& w : h.wires) w = phys[w];
    add(std::move(h));
  }
  for (std::size_t w = 0; w < logical.size(); ++w) layout_[logical[w]] = phys[sub.layout()[w]];
  return *this;
}

Circuit& Circuit::append(const Circuit& sub) {
  std::vector<int> all(sub.num_wires());
  std::iota(all.begin(), all.end(), 0);
  return append(sub, all);
}

Circuit Circuit::inverse_gates() const {
  Circuit out(dims_, label_.empty() ? std::string{} : label_ + "^-1");
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    for (auto& g : adjoint(*it)) out.add(std::move(g));
  return out;
}

Matrix densify(const Circuit& c, std::size_t cap) {
  const std::size_t d = total_dim(c.dims());
  if (d > cap) throw CapError("densify: dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  Matrix u = Matrix::Identity(d, d);
  for (const Gate& g : c.gates()) {
    const Matrix m = gate_matrix(g);
    for (std::size_t col = 0; col < d; ++col)
      sim::apply(sim::default_backend(), u.col(col).data(), c.dims(), m, g.wires);
  }
  return u;
}

Matrix densify_logical(const Circuit& c, std::size_t cap) {
  Matrix u = densify(c, cap);
  if (c.identity_layout()) return u;
  return wire_permutation(c.layout(), c.dims()).transpose() * u;
}

std::string to_string(const Connectivity& c) { return c.kind == Connectivity::Kind::AllToAll ? "all" : "t"; }

Connectivity connectivity_from_string(const std::string& s) {
  if (s == "all") return Connectivity::all_to_all();
  if (s == "t") return Connectivity::t_shape();
  throw DomainError("unknown connectivity '" + s + "' (expected all or t)");
}

void check_connectivity(const Circuit& c, const Connectivity& conn) {
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (g.wires.size() == 2 && !conn.allows(g.wires[0], g.wires[1]))
      throw ConstructionError("gate " + std::to_string(i) + " (" + std::string(name(g.kind)) + " " +
                              std::to_string(g.wires[0]) + " " + std::to_string(g.wires[1]) +
                              ") violates " + to_string(conn) + " connectivity");
  }
}

std::map<std::string, int> gate_counts(const Circuit& c) {
  std::map<std::string, int> out;
  for (const Gate& g : c.gates()) ++out[std::string(name(g.kind))];
  return out;
}

}  // namespace nuq::qcir
