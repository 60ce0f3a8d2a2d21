// Serial reference kernels against their OpenMP versions on the workloads the
// library actually runs: tabulating crossed products, composing isomorphism
// matrices, and evaluating random bilinear trials.

#include <benchmark/benchmark.h>

#include <random>

#include "hopfxyz/catalog.hpp"
#include "hopfxyz/isomorphisms.hpp"

using namespace hopf;

namespace {

HopfAlgebraData pick(std::int64_t which) {
  switch (which) {
    case 0: return cyclic_group_algebra(2);
    case 1: return cyclic_group_algebra(3);
    default: return sweedler4();
  }
}

template <bool Parallel>
void BM_TabulateZ(benchmark::State& state) {
  const HopfTriple t = standard_triple(pick(state.range(0)));
  const AlgebraHandle z = build_Z(t);
  const kernels::BasisOracle oracle = [&](Index i, Index j) { return z.basis_product(i, j); };
  for (auto _ : state) {
    BilinearTable table = Parallel ? kernels::parallel::tabulate(z.field(), z.dim(), z.dim(), z.dim(), oracle)
                                   : kernels::serial::tabulate(z.field(), z.dim(), z.dim(), z.dim(), oracle);
    benchmark::DoNotOptimize(table);
  }
  state.counters["dim"] = z.dim();
}

template <bool Parallel>
void BM_ComposeAlphaPhi(benchmark::State& state) {
  const HopfTriple t = standard_triple(pick(state.range(0)));
  const LinearMap alpha = build_iso(IsoKind::alpha, t), phi = build_iso(IsoKind::phi, t);
  for (auto _ : state) {
    LinearMap m = Parallel ? kernels::parallel::compose(alpha, phi) : kernels::serial::compose(alpha, phi);
    benchmark::DoNotOptimize(m);
  }
  state.counters["dim"] = phi.src_dim();
}

template <bool Parallel>
void BM_BilinearTrial(benchmark::State& state) {
  const AlgebraHandle y = build_Y(standard_triple(pick(state.range(0))));
  const BilinearTable& table = y.table();
  std::mt19937_64 rng(1);
  const Vector x = random_vector(y.field(), y.dim(), rng), z = random_vector(y.field(), y.dim(), rng);
  for (auto _ : state) {
    Vector v = Parallel ? kernels::parallel::bilinear(table, x, z) : kernels::serial::bilinear(table, x, z);
    benchmark::DoNotOptimize(v);
  }
  state.counters["nnz"] = static_cast<double>(table.nnz());
}

}  // namespace

BENCHMARK(BM_TabulateZ<false>)->Name("tabulate_Z/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TabulateZ<true>)->Name("tabulate_Z/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeAlphaPhi<false>)->Name("compose/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeAlphaPhi<true>)->Name("compose/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BilinearTrial<false>)->Name("bilinear/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BilinearTrial<true>)->Name("bilinear/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
