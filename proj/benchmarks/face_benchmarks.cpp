#include <benchmark/benchmark.h>

#include <vector>

#include "ocpkit/faces.hpp"
#include "ocpkit/geometry.hpp"
#include "ocpkit/poset.hpp"

namespace {

ocpkit::poset level_poset(std::vector<int> sizes) {
  return ocpkit::ordinal_sum_of_antichains(sizes);
}

void bm_enumerate_ideals(benchmark::State& state) {
  ocpkit::poset p = level_poset({3, 3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::enumerate_ideals(p));
}
BENCHMARK(bm_enumerate_ideals);

void bm_order_triangles(benchmark::State& state) {
  ocpkit::poset p = level_poset({2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::o_triangles(p));
}
BENCHMARK(bm_order_triangles);

void bm_chain_triangles(benchmark::State& state) {
  ocpkit::poset p = level_poset({2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::c_triangles(p));
}
BENCHMARK(bm_chain_triangles);

void bm_full_report(benchmark::State& state) {
  ocpkit::poset p = level_poset({2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::compare(p));
}
BENCHMARK(bm_full_report);

void bm_geometric_triangle_scan(benchmark::State& state) {
  ocpkit::poset p = level_poset({2, 2, 2});
  ocpkit::polytope_model m = ocpkit::order_polytope_model(p);
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::brute_triangles(m));
}
BENCHMARK(bm_geometric_triangle_scan);

void bm_excess_formula(benchmark::State& state) {
  std::vector<int> sizes = {6, 5, 6, 5, 6, 5, 6, 5};
  for (auto _ : state) benchmark::DoNotOptimize(ocpkit::excess_formula(sizes));
}
BENCHMARK(bm_excess_formula);

void bm_random_poset_build(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(ocpkit::random_poset(32, 0.3, seed++));
}
BENCHMARK(bm_random_poset_build);

} // namespace

BENCHMARK_MAIN();
