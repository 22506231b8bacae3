#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace nuq {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};

/// Mixed-radix register: dims[w] is the local dimension of wire w. Wire 0 is
/// the leftmost tensor factor (most significant digit of a basis index).
using Dims = std::vector<int>;

std::size_t total_dim(std::span<const int> dims);

/// Digits of `index` in the register, wire 0 first.
std::vector<int> digits_of(std::size_t index, std::span<const int> dims);
std::size_t index_of(std::span<const int> digits, std::span<const int> dims);

Matrix kron(const Matrix& a, const Matrix& b);

/// Embed a local operator acting on `wires` (in that order) into the full
/// register. The local operator's first tensor factor is wires[0].
Matrix embed(const Matrix& local, std::span<const int> wires, std::span<const int> dims);
/// out += scale * embed(local, wires, dims) without the temporary.
void embed_add(Matrix& out, const Matrix& local, std::span<const int> wires,
               std::span<const int> dims, cplx scale);

Matrix commutator(const Matrix& a, const Matrix& b);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/// Entrywise max |a_ij|.
double max_abs(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol);

/// exp(-i t H) for Hermitian H via one eigendecomposition.
Matrix expm_hermitian(const Matrix& h, double t);

/// min over phi of max_ij |a - e^{i phi} b|, with phi taken from the largest
/// entry of b. Used to compare unitaries up to a global phase.
double distance_up_to_phase(const Matrix& a, const Matrix& b);

/// Rows/columns `idx` of `a`.
Matrix submatrix(const Matrix& a, std::span<const std::size_t> idx);

/// Permutation matrix P with P|x_0 ... x_{n-1}> = |y> where wire w's digit is
/// moved to wire perm[w]. All permuted wires must share a dimension.
Matrix wire_permutation(std::span<const int> perm, std::span<const int> dims);

}  // namespace nuq
