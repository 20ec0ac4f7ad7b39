#include <benchmark/benchmark.h>

#include "boxlab/bass_serre.hpp"
#include "boxlab/baumslag.hpp"
#include "boxlab/expansion.hpp"
#include "boxlab/tower.hpp"

using namespace boxlab;

namespace {

FreeProduct z2_star_z3() {
  return FreeProduct(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3));
}

void BM_build_tower_rank2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(2, state.range(0)));
}
BENCHMARK(BM_build_tower_rank2)->Arg(1)->Arg(2);

void BM_wall_metric_row(benchmark::State& state) {
  const auto lv = build_tower(2, 2).levels.back();
  for (auto _ : state) {
    int s = 0;
    for (int y = 0; y < lv.vertex_count(); ++y) s += wall_metric(lv, 0, y);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_wall_metric_row);

void BM_cheeger_exact(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cheeger_exact(g));
}
BENCHMARK(BM_cheeger_exact)->Arg(12)->Arg(16)->Arg(20);

void BM_truncated_words(benchmark::State& state) {
  const auto fp = z2_star_z3();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_truncated_words(fp, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_truncated_words)->Arg(6)->Arg(10);

void BM_express_in_basis(benchmark::State& state) {
  const auto fp = z2_star_z3();
  const auto basis = commutator_basis(fp);
  const auto ball = basis_ball(fp, basis, 4);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& w : ball.words) total += express_in_basis(fp, basis, w).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_express_in_basis);

}  // namespace

BENCHMARK_MAIN();
