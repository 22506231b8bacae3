#include <omp.h>

#include "nuq/errors.hpp"
#include "nuq/sim/kernels.hpp"

namespace nuq::sim {

void apply_omp(cplx* psi, std::span<const int> dims, const Matrix& u, std::span<const int> wires) {
  const LocalPlan plan(dims, wires);
  const std::size_t dl = plan.local_dim;
  if (static_cast<std::size_t>(u.rows()) != dl || u.cols() != u.rows())
    throw DomainError("kernel: operator shape does not match wires");
  const std::size_t nb = plan.num_bases();
  // Row-major copy so the inner loop walks contiguous memory.
  std::vector<cplx> m(dl * dl);
  for (std::size_t r = 0; r < dl; ++r)
    for (std::size_t c = 0; c < dl; ++c) m[r * dl + c] = u(r, c);

  const long long nbl = static_cast<long long>(nb);
#pragma omp parallel if (nb >= 256)
  {
    std::vector<cplx> in(dl);
#pragma omp for schedule(static)
    for (long long k = 0; k < nbl; ++k) {
      const std::size_t b = plan.base(static_cast<std::size_t>(k));
      for (std::size_t l = 0; l < dl; ++l) in[l] = psi[b + plan.offsets[l]];
      for (std::size_t r = 0; r < dl; ++r) {
        cplx acc = 0.0;
        const cplx* row = &m[r * dl];
        for (std::size_t c = 0; c < dl; ++c) acc += row[c] * in[c];
        psi[b + plan.offsets[r]] = acc;
      }
    }
  }
}

}  // namespace nuq::sim
