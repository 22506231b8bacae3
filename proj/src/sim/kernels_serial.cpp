#include <atomic>

#include "nuq/errors.hpp"
#include "nuq/sim/kernels.hpp"

namespace nuq::sim {

namespace {
std::atomic<Backend> g_backend{Backend::OpenMP};
}

LocalPlan::LocalPlan(std::span<const int> dims, std::span<const int> wires) {
  const std::size_t n = dims.size();
  std::vector<std::size_t> strides(n);
  std::size_t acc = 1;
  for (std::size_t w = n; w-- > 0;) {
    strides[w] = acc;
    acc *= static_cast<std::size_t>(dims[w]);
  }
  dim = acc;
  std::vector<bool> touched(n, false);
  std::vector<int> local_dims;
  for (int w : wires) {
    if (w < 0 || static_cast<std::size_t>(w) >= n || touched[w])
      throw DomainError("kernel: bad wire list");
    touched[w] = true;
    local_dims.push_back(dims[w]);
  }
  local_dim = total_dim(local_dims);
  offsets.resize(local_dim);
  for (std::size_t l = 0; l < local_dim; ++l) {
    auto dg = digits_of(l, local_dims);
    std::size_t off = 0;
    for (std::size_t k = 0; k < wires.size(); ++k) off += dg[k] * strides[wires[k]];
    offsets[l] = off;
  }
  for (std::size_t w = 0; w < n; ++w)
    if (!touched[w]) {
      other_strides.push_back(strides[w]);
      other_dims.push_back(dims[w]);
    }
}

std::size_t LocalPlan::base(std::size_t k) const {
  std::size_t idx = 0;
  for (std::size_t i = other_dims.size(); i-- > 0;) {
    const std::size_t d = static_cast<std::size_t>(other_dims[i]);
    idx += (k % d) * other_strides[i];
    k /= d;
  }
  return idx;
}

void apply_serial(cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires) {
  const LocalPlan plan(dims, wires);
  if (static_cast<std::size_t>(u.rows()) != plan.local_dim || u.cols() != u.rows())
    throw DomainError("kernel: operator shape does not match wires");
  std::vector<std::size_t> wire_strides;
  for (int w : wires) {
    std::size_t stride = 1;
    for (std::size_t v = dims.size(); v-- > static_cast<std::size_t>(w) + 1;) stride *= dims[v];
    wire_strides.push_back(stride);
  }
  std::vector<cplx> in(plan.local_dim);
  for (std::size_t i = 0; i < plan.dim; ++i) {
    // i is a base exactly when all gate-wire digits are zero
    bool is_base = true;
    for (std::size_t k = 0; k < wires.size() && is_base; ++k)
      is_base = (i / wire_strides[k]) % dims[wires[k]] == 0;
    if (!is_base) continue;
    for (std::size_t l = 0; l < plan.local_dim; ++l) in[l] = psi[i + plan.offsets[l]];
    for (std::size_t r = 0; r < plan.local_dim; ++r) {
      cplx acc = 0.0;
      for (std::size_t c = 0; c < plan.local_dim; ++c) acc += u(r, c) * in[c];
      psi[i + plan.offsets[r]] = acc;
    }
  }
}

void apply(Backend b, cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires) {
  if (b == Backend::Serial)
    apply_serial(psi, dims, u, wires);
  else
    apply_omp(psi, dims, u, wires);
}

void apply_density(Backend b, Matrix& rho, std::span<const int> dims, const Matrix& u, std::span<const int> wires) {
  const std::size_t n = dims.size();
  const std::size_t d = total_dim(dims);
  if (static_cast<std::size_t>(rho.rows()) != d || rho.cols() != rho.rows())
    throw DomainError("apply_density: matrix does not match register");
  // Column-major storage: entry (i, j) sits at i + D j, i.e. a doubled
  // register with the column index as the leading wires.
  std::vector<int> dims2(dims.begin(), dims.end());
  dims2.insert(dims2.end(), dims.begin(), dims.end());
  std::vector<int> row_wires, col_wires;
  for (int w : wires) {
    row_wires.push_back(static_cast<int>(n) + w);
    col_wires.push_back(w);
  }
  apply(b, rho.data(), dims2, u, row_wires);
  apply(b, rho.data(), dims2, u.conjugate(), col_wires);
}

Backend default_backend() { return g_backend.load(); }
void set_default_backend(Backend b) { g_backend.store(b); }

}  // namespace nuq::sim
