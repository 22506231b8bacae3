#include "nuq/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "nuq/errors.hpp"

namespace nuq {

namespace {

std::vector<std::size_t> strides_of(std::span<const int> dims) {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t w = dims.size(); w-- > 0;) {
    s[w] = acc;
    acc *= static_cast<std::size_t>(dims[w]);
  }
  return s;
}

}  // namespace

std::size_t total_dim(std::span<const int> dims) {
  std::size_t d = 1;
  for (int x : dims) d *= static_cast<std::size_t>(x);
  return d;
}

std::vector<int> digits_of(std::size_t index, std::span<const int> dims) {
  std::vector<int> out(dims.size());
  for (std::size_t w = dims.size(); w-- > 0;) {
    out[w] = static_cast<int>(index % static_cast<std::size_t>(dims[w]));
    index /= static_cast<std::size_t>(dims[w]);
  }
  return out;
}

std::size_t index_of(std::span<const int> digits, std::span<const int> dims) {
  std::size_t idx = 0;
  for (std::size_t w = 0; w < dims.size(); ++w) idx = idx * dims[w] + digits[w];
  return idx;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void embed_add(Matrix& out, const Matrix& local, std::span<const int> wires,
               std::span<const int> dims, cplx scale) {
  const auto strides = strides_of(dims);
  std::vector<int> local_dims;
  for (int w : wires) local_dims.push_back(dims[w]);
  const std::size_t dl = total_dim(local_dims);
  if (static_cast<std::size_t>(local.rows()) != dl || local.cols() != local.rows())
    throw DomainError("embed: local operator shape does not match wire dimensions");
  const std::size_t d = total_dim(dims);
  if (static_cast<std::size_t>(out.rows()) != d || out.cols() != out.rows())
    throw DomainError("embed: target matrix has the wrong size");

  // Offset of each local basis state inside the full register.
  std::vector<std::size_t> offset(dl);
  for (std::size_t l = 0; l < dl; ++l) {
    auto dg = digits_of(l, local_dims);
    std::size_t off = 0;
    for (std::size_t k = 0; k < wires.size(); ++k) off += dg[k] * strides[wires[k]];
    offset[l] = off;
  }

  for (std::size_t j = 0; j < d; ++j) {
    std::size_t base = j;
    std::size_t lc = 0;
    for (std::size_t k = 0; k < wires.size(); ++k) {
      const std::size_t digit = (j / strides[wires[k]]) % dims[wires[k]];
      base -= digit * strides[wires[k]];
      lc = lc * dims[wires[k]] + digit;
    }
    for (std::size_t lr = 0; lr < dl; ++lr) {
      const cplx v = local(lr, lc);
      if (v != cplx{}) out(base + offset[lr], j) += scale * v;
    }
  }
}

Matrix embed(const Matrix& local, std::span<const int> wires, std::span<const int> dims) {
  const std::size_t d = total_dim(dims);
  Matrix out = Matrix::Zero(d, d);
  embed_add(out, local, wires, dims, 1.0);
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) throw NumericError("expm_hermitian: eigensolver failed");
  Vector phases = (-kI * t * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double distance_up_to_phase(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  cplx phase = b(r, c) == cplx{} ? cplx{1.0} : a(r, c) / b(r, c);
  if (std::abs(phase) > 0) phase /= std::abs(phase);
  return max_abs(a - phase * b);
}

Matrix submatrix(const Matrix& a, std::span<const std::size_t> idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = a(idx[i], idx[j]);
  return out;
}

Matrix wire_permutation(std::span<const int> perm, std::span<const int> dims) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw DomainError("wire_permutation: size mismatch");
  for (std::size_t w = 0; w < n; ++w)
    if (dims[perm[w]] != dims[w]) throw DomainError("wire_permutation: mixed dimensions");
  const std::size_t d = total_dim(dims);
  Matrix p = Matrix::Zero(d, d);
  std::vector<int> out(n);
  for (std::size_t x = 0; x < d; ++x) {
    auto dg = digits_of(x, dims);
    for (std::size_t w = 0; w < n; ++w) out[perm[w]] = dg[w];
    p(index_of(out, dims), x) = 1.0;
  }
  return p;
}

}  // namespace nuq
