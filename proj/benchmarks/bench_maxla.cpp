#include "maxla/arrangement.hpp"
#include "maxla/bnb.hpp"
#include "maxla/free_tree.hpp"
#include "maxla/oracle.hpp"
#include "maxla/solvers.hpp"
#include "maxla/treegen.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace maxla;

namespace {

// Random-attachment trees: not uniform over isomorphism classes, but cheap
// at any size (the exact-count sampler is limited to 128-bit count tables).
std::vector<free_tree> corpus(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<free_tree> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(n - 1);
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(rng() % v), v);
        out.emplace_back(graph(n, std::move(edges)));
    }
    return out;
}

} // namespace

static void BM_bipartite_solver(benchmark::State& state) {
    auto trees = corpus(static_cast<int>(state.range(0)), 64, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bipartite_maxla(trees[i]).value);
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_bipartite_solver)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

static void BM_one_thistle_solver(benchmark::State& state) {
    auto trees = corpus(static_cast<int>(state.range(0)), 64, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = one_thistle_maxla(trees[i]);
        benchmark::DoNotOptimize(r ? r->value : 0);
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_one_thistle_solver)->Arg(16)->Arg(64)->Arg(256);

static void BM_exact_search(benchmark::State& state) {
    auto trees = corpus(static_cast<int>(state.range(0)), 16, 3);
    bnb_options opts;
    opts.collect_witnesses = false;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bnb_solve(trees[i], opts).value);
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_exact_search)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_brute_sweep(benchmark::State& state) {
    auto trees = corpus(static_cast<int>(state.range(0)), 4, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_maxla(trees[i].g()).value);
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_brute_sweep)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_enumerate(benchmark::State& state) {
    for (auto _ : state) {
        std::int64_t total = 0;
        enumerate_free_trees(static_cast<int>(state.range(0)),
                             [&](const free_tree&) { ++total; });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_enumerate)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_sample(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    rooted_tree_counts counts(n);
    std::mt19937_64 rng(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_free_tree(n, rng, counts).num_vertices());
}
BENCHMARK(BM_sample)->Arg(16)->Arg(32)->Arg(64);

static void BM_canonical_code(benchmark::State& state) {
    auto trees = corpus(static_cast<int>(state.range(0)), 64, 6);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(trees[i]).size());
        i = (i + 1) % trees.size();
    }
}
BENCHMARK(BM_canonical_code)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
