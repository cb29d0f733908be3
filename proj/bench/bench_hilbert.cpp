// Serial vs OpenMP kernels of the Hilbert basis computation.
#include <benchmark/benchmark.h>

#include "horofan/polyhedra.hpp"

using namespace horofan;

namespace {

// Simplicial cone with determinant k^(n-1) * m: many parallelepiped points.
IntMatrix wide_simplex(std::size_t n, long k) {
  IntMatrix G = IntMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) G(i, i) = k;
  for (std::size_t i = 1; i < n; ++i) G(0, i) = 1;
  G(n - 1, 0) = 1;
  return G;
}

void BM_Parallelepiped(benchmark::State& state, bool parallel) {
  IntMatrix G = wide_simplex(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state) {
    auto pts = parallel ? kernels::parallelepiped_points_parallel(G) : kernels::parallelepiped_points_serial(G);
    benchmark::DoNotOptimize(pts);
  }
}

void BM_Irreducible(benchmark::State& state, bool parallel) {
  IntMatrix G = wide_simplex(static_cast<std::size_t>(state.range(0)), state.range(1));
  auto cand = kernels::parallelepiped_points_serial(G);
  for (const auto& g : G.col_vectors()) cand.push_back(g);
  Cone s = Cone::from_generators(G.rows(), G.col_vectors());
  for (auto _ : state) {
    auto out = parallel ? kernels::irreducible_parallel(cand, s.facets()) : kernels::irreducible_serial(cand, s.facets());
    benchmark::DoNotOptimize(out);
  }
}

void BM_HilbertBasis(benchmark::State& state, Execution exec) {
  Cone s = Cone::from_generators(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, state.range(0)}),
                                     make_vector({-1, 2, 3})});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(s, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Parallelepiped, serial, false)->Args({3, 20})->Args({4, 12});
BENCHMARK_CAPTURE(BM_Parallelepiped, parallel, true)->Args({3, 20})->Args({4, 12});
BENCHMARK_CAPTURE(BM_Irreducible, serial, false)->Args({3, 12})->Args({4, 6});
BENCHMARK_CAPTURE(BM_Irreducible, parallel, true)->Args({3, 12})->Args({4, 6});
BENCHMARK_CAPTURE(BM_HilbertBasis, serial, Execution::serial)->Arg(15)->Arg(40);
BENCHMARK_CAPTURE(BM_HilbertBasis, parallel, Execution::parallel)->Arg(15)->Arg(40);

BENCHMARK_MAIN();
