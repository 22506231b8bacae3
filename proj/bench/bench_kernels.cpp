// Serial reference kernel vs OpenMP kernel on qubit and qutrit registers.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nuq/qcir/gate.hpp"
#include "nuq/sim/kernels.hpp"

namespace {

using nuq::cplx;

std::vector<cplx> random_state(std::size_t d) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<cplx> v(d);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

void run(benchmark::State& state, nuq::sim::Backend b, int qudit_dim, const nuq::qcir::Gate& gate) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> dims(n, qudit_dim);
  std::size_t d = 1;
  for (int x : dims) d *= x;
  auto psi = random_state(d);
  const auto u = nuq::qcir::gate_matrix(gate);
  std::vector<int> wires = gate.wires;
  for (auto& w : wires) w = w % n;  // keep gate wires inside small registers
  for (auto _ : state) {
    nuq::sim::apply(b, psi.data(), dims, u, wires);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d));
}

const nuq::qcir::Gate kCnot{nuq::qcir::GateKind::CNOT, {1, 3}, {}};
const nuq::qcir::Gate kRy{nuq::qcir::GateKind::Ry, {2}, {0.3}};
const nuq::qcir::Gate kCr{nuq::qcir::GateKind::CR02, {1, 2}, {1.0, 0.4}};

void BM_Cnot_Serial(benchmark::State& s) { run(s, nuq::sim::Backend::Serial, 2, kCnot); }
void BM_Cnot_OpenMP(benchmark::State& s) { run(s, nuq::sim::Backend::OpenMP, 2, kCnot); }
void BM_Ry_Serial(benchmark::State& s) { run(s, nuq::sim::Backend::Serial, 2, kRy); }
void BM_Ry_OpenMP(benchmark::State& s) { run(s, nuq::sim::Backend::OpenMP, 2, kRy); }
void BM_QutritCR_Serial(benchmark::State& s) { run(s, nuq::sim::Backend::Serial, 3, kCr); }
void BM_QutritCR_OpenMP(benchmark::State& s) { run(s, nuq::sim::Backend::OpenMP, 3, kCr); }

}  // namespace

BENCHMARK(BM_Cnot_Serial)->DenseRange(8, 20, 4);
BENCHMARK(BM_Cnot_OpenMP)->DenseRange(8, 20, 4);
BENCHMARK(BM_Ry_Serial)->DenseRange(8, 20, 4);
BENCHMARK(BM_Ry_OpenMP)->DenseRange(8, 20, 4);
BENCHMARK(BM_QutritCR_Serial)->DenseRange(4, 12, 4);
BENCHMARK(BM_QutritCR_OpenMP)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
