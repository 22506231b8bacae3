#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nuq/linalg.hpp"

namespace nuq::qcir {

enum class GateKind {
  // qubit
  H, X, Y, Z, S, Sdg, Rx, Ry, Rz, CNOT, CRy, Rzz, Rzx, SWAP2,
  // qutrit
  CXt, CZ3, F3, R01, R02, R12, CR01, CR02, CR12, U3x3, SWAP3,
};

struct GateInfo {
  std::string_view name;
  int arity;
  int wire_dim;
  int num_params;
};

const GateInfo& info(GateKind k);
std::string_view name(GateKind k);
/// Throws DomainError for unknown names.
GateKind kind_from_name(std::string_view s);
const std::vector<GateKind>& all_kinds();

/// Rotation angles follow exp(-i a P / 2) for Rx, Ry, Rz, Rzz, Rzx.
/// CRy: wires (control, target). Rzx: wires (Z wire, X wire).
/// CXt: |x>|y> -> |x>|-x-y mod 3>, wires (control, target).
/// Rij(t): exp(-i t X^{ij}) times e^{-i t} on the remaining level.
/// CRij: wires (target, control), params (control value, t).
/// U3x3: 18 params, row-major (re, im) pairs.
struct Gate {
  GateKind kind;
  std::vector<int> wires;
  std::vector<double> params;
};

Matrix gate_matrix(const Gate& g);

/// Arity, parameter count, wire range, distinctness and wire dimensions.
void validate(const Gate& g, std::span<const int> dims);

/// Gate(s) implementing the adjoint.
std::vector<Gate> adjoint(const Gate& g);

/// Closed-form pieces reused by builders and tests.
Matrix rz(double a);
Matrix ry(double a);
Matrix rx(double a);
Matrix qutrit_rotation(int i, int j, double t);
Matrix u3x3_from_params(std::span<const double> p);
std::vector<double> u3x3_params(const Matrix& u);

}  // namespace nuq::qcir
