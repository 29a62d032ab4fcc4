// Microbenchmarks for the hot paths: integer normal forms, the subset-graded
// table, the model build, permutohedral enumeration and map evaluation.

#include <benchmark/benchmark.h>

#include <vector>

#include "maw/golod.hpp"
#include "maw/hochster.hpp"
#include "maw/homology.hpp"
#include "maw/koszul.hpp"
#include "maw/partitions.hpp"
#include "maw/plmaps.hpp"
#include "maw/rng.hpp"
#include "maw/simplicial_complex.hpp"

using namespace maw;

namespace {

SimplicialComplex five_vertex_example() {
  return SimplicialComplex::from_facets(
      5, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}, {4, 5}});
}

void bm_integer_homology_kn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto C = build_Kn(n);
  for (auto _ : state) {
    // fresh chain complex per iteration, the normal form cache would
    // otherwise make every pass after the first free
    auto cc = C.chain_complex();
    auto h = reduced_homology_z(cc);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_integer_homology_kn)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_bigraded_table(benchmark::State& state) {
  auto K = five_vertex_example();
  const FieldSpec field{state.range(0)};
  for (auto _ : state) {
    auto T = bigraded_betti(K, field);
    benchmark::DoNotOptimize(T);
  }
}
BENCHMARK(bm_bigraded_table)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void bm_model_cohomology(benchmark::State& state) {
  auto K = five_vertex_example();
  const FieldSpec field{state.range(0)};
  for (auto _ : state) {
    auto totals = dispatch_field(field, [&](auto f) {
      KoszulModel<decltype(f)> M(f, K);
      return M.cohomology_total_by_degree();
    });
    benchmark::DoNotOptimize(totals);
  }
}
BENCHMARK(bm_model_cohomology)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void bm_build_kn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto C = build_Kn(n);
    benchmark::DoNotOptimize(C);
  }
}
BENCHMARK(bm_build_kn)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_phi_eval(benchmark::State& state) {
  auto K = five_vertex_example();
  Rng rng(7);
  std::vector<Rat> z{Rat(1, 3), Rat(1, 3), Rat(0), Rat(1, 3), Rat(0)};
  auto p = BarycentricPoint::make(z);
  for (auto _ : state) {
    std::vector<Rat> ts(4);
    for (auto& t : ts) t = rng.next_rat(-1, 1, 8);
    auto r = phi_eval(K, ts, rng.next_rat(-1, 1, 8), p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_phi_eval);

void bm_psi_eval(benchmark::State& state) {
  auto K = SimplicialComplex::skeleton(5, 3);
  Rng rng(7);
  auto x = SmashPoint::make({Rat(1, 2), Rat(-1, 4), Rat(0), Rat(1), Rat(1)});
  for (auto _ : state) {
    std::vector<Rat> ts(4);
    for (auto& t : ts) t = rng.next_rat(-1, 1, 8);
    auto r = psi_neighbourly_eval(K, ts, x);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(bm_psi_eval);

}  // namespace

BENCHMARK_MAIN();
