#include <benchmark/benchmark.h>

#include "sombor/canonical.hpp"
#include "sombor/extremal.hpp"
#include "sombor/graph_io.hpp"

namespace {

void BM_canonical_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto graphs = sombor::enumerate_class({n, sombor::GraphClassKind::connected});
    for (auto _ : state) {
        std::size_t acc = 0;
        for (const sombor::Graph& g : graphs) acc += sombor::canonical_form(g).size();
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_canonical_form)->Arg(5)->Arg(6);

void BM_mask_canonicity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::uint64_t total = 1ull << (n * (n - 1) / 2);
    for (auto _ : state) {
        std::size_t kept = 0;
        for (std::uint64_t mask = 0; mask < total; ++mask)
            kept += sombor::is_canonical_triangle_mask(n, mask);
        benchmark::DoNotOptimize(kept);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(total));
}
BENCHMARK(BM_mask_canonicity)->Arg(5)->Arg(6);

void BM_graph6_round_trip(benchmark::State& state) {
    const auto graphs = sombor::enumerate_class({6, sombor::GraphClassKind::all});
    for (auto _ : state) {
        std::size_t acc = 0;
        for (const sombor::Graph& g : graphs)
            acc += sombor::parse_graph6(sombor::to_graph6(g)).edge_count();
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_graph6_round_trip);

}  // namespace

BENCHMARK_MAIN();
