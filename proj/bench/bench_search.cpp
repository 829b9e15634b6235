// Reference exhaustive search vs the pruned search on one worker vs all workers.
#include "zforce/bounds.hpp"
#include "zforce/enumerate.hpp"
#include "zforce/families.hpp"
#include "zforce/search.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace zforce;

namespace {

auto instance(int which) -> Graph
{
    switch (which) {
    case 0:
        return pinwheel12();
    case 1:
        return cartesian_product(path_graph(4), cycle_graph(4));
    case 2:
        return cartesian_product(cycle_graph(4), cycle_graph(5));
    default: {
        std::mt19937_64 rng(static_cast<std::uint64_t>(which));
        return random_connected_graph(18, 0.25, rng);
    }
    }
}

void bm_reference(benchmark::State & state)
{
    auto g = instance(static_cast<int>(state.range(0)));
    auto rule = state.range(1) ? Rule::psd : Rule::standard;
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::minimum_forcing_sets(g, rule).value);
    state.SetLabel("n=" + std::to_string(g.order()));
}

void bm_search(benchmark::State & state, unsigned workers)
{
    auto g = instance(static_cast<int>(state.range(0)));
    auto rule = state.range(1) ? Rule::psd : Rule::standard;
    SearchOptions opts;
    opts.workers = workers;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto r = zero_forcing_number(g, rule, opts);
        nodes = r.nodes_explored;
        benchmark::DoNotOptimize(r.value);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
    state.SetLabel("n=" + std::to_string(g.order()));
}

void bm_serial(benchmark::State & state) { bm_search(state, 1); }
void bm_parallel(benchmark::State & state) { bm_search(state, 0); }

void bm_clique_cover(benchmark::State & state)
{
    auto g = pinwheel12();
    BoundsOptions opts;
    opts.search.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_cover_number(g, opts).value);
}

void args(benchmark::internal::Benchmark * b)
{
    for (int which : {0, 1, 2, 3})
        for (int psd : {0, 1})
            b->Args({which, psd});
    b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(bm_reference)->Apply(args);
BENCHMARK(bm_serial)->Apply(args);
BENCHMARK(bm_parallel)->Apply(args);
BENCHMARK(bm_clique_cover)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
