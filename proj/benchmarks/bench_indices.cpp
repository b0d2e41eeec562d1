#include <benchmark/benchmark.h>

#include "sombor/extremal.hpp"
#include "sombor/indices.hpp"
#include "sombor/inequalities.hpp"

namespace {

const std::vector<sombor::Graph>& corpus6() {
    static const auto graphs =
        sombor::enumerate_class({6, sombor::GraphClassKind::connected});
    return graphs;
}

void BM_ka_kernel(benchmark::State& state) {
    const auto& graphs = corpus6();
    const double alpha = static_cast<double>(state.range(0));
    for (auto _ : state) {
        double acc = 0;
        for (const sombor::Graph& g : graphs) acc += sombor::ka_index(g, alpha, 0.5);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_ka_kernel)->Arg(2)->Arg(3)->Arg(-2);

void BM_named_sombor(benchmark::State& state) {
    const auto& graphs = corpus6();
    for (auto _ : state) {
        double acc = 0;
        for (const sombor::Graph& g : graphs)
            acc += sombor::evaluate_index(g, {sombor::IndexFamily::SO});
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_named_sombor);

void BM_checker_chain(benchmark::State& state) {
    const auto& graphs = corpus6();
    for (auto _ : state) {
        std::size_t rows = 0;
        for (const sombor::Graph& g : graphs)
            rows += sombor::check_ka_power_chain(g, 2.0, 1.0, 0.5).size();
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_checker_chain);

void BM_suite_one_graph(benchmark::State& state) {
    const std::vector<sombor::Graph> corpus = {sombor::complete_graph(5)};
    const auto grid = sombor::ParameterGrid::defaults();
    sombor::SuiteOptions options;
    options.threads = 1;
    for (auto _ : state) {
        const auto report = sombor::run_suite(corpus, grid, options);
        benchmark::DoNotOptimize(report.rows.size());
    }
}
BENCHMARK(BM_suite_one_graph);

}  // namespace

BENCHMARK_MAIN();
