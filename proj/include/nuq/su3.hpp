#pragma once

#include <array>

#include "nuq/linalg.hpp"

/// SU(3) flavor algebra: Gell-Mann matrices, structure constants, and their
/// embedding into a two-qubit space with |00> as the unphysical state.
///
/// Two-qubit basis order is (|00>, |01>, |10>, |11>) with qubit 0 the left
/// tensor factor; the physical block {|01>, |10>, |11>} carries the three
/// flavor (or mass) slots in that order.
namespace nuq::su3 {

/// lambda_i for i in 1..8, Tr[lambda_i lambda_j] = 2 delta_ij.
const Matrix& gell_mann(int i);

/// f_ijk, totally antisymmetric; indices 1..8.
double structure_constant(int i, int j, int k);

/// Q_i = 0 (+) lambda_i on two qubits.
const Matrix& qubit_generator(int i);

/// (+-lambda_3 + sqrt(3) lambda_8) / 2.
Matrix lambda_plus();
Matrix lambda_minus();

/// sum_a g_a (x) g_a for the eight generators given (3x3 or 4x4 each).
Matrix casimir_pair(const std::array<Matrix, 8>& g);

struct CasimirSwap {
  Matrix lhs;   // (1/n) 1 + (1/2) sum_a g_a (x) g_a
  Matrix swap;  // n^2 x n^2 permutation |x>|y> -> |y>|x>
};

/// n = 2 uses Pauli matrices, n = 3 Gell-Mann matrices.
CasimirSwap casimir_swap(int n);

std::array<Matrix, 8> gell_mann_all();
std::array<Matrix, 8> qubit_generators_all();

}  // namespace nuq::su3
