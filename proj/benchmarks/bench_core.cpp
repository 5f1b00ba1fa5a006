#include <benchmark/benchmark.h>

#include <random>

#include "crosscap/homology.hpp"
#include "crosscap/skeleton.hpp"
#include "crosscap/smith.hpp"
#include "crosscap/triangulation.hpp"

using namespace crosscap;

namespace {

// Chain of n tetrahedra glued face to face (a ball), then doubled into a
// closed manifold with 2n tetrahedra. Linear in n, so benchmarks scale.
Triangulation doubled_chain(int n) {
    Triangulation t(n);
    for (int i = 0; i + 1 < n; ++i) t.set_gluing(i, 0, i + 1, Perm4::from_digits("1032"));
    return double_triangulation(t);
}

IntMatrix random_matrix(long long rows, long long cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> val(-9, 9), coin(0, 9);
    IntMatrix m(rows, cols);
    for (long long r = 0; r < rows; ++r)
        for (long long c = 0; c < cols; ++c)
            if (coin(rng) < 7) m(r, c) = val(rng);
    return m;
}

void BM_skeleton(benchmark::State& state) {
    Triangulation t = doubled_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Skeleton sk = compute_skeleton(t);
        benchmark::DoNotOptimize(sk.vertex_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_skeleton)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_manifold_check(benchmark::State& state) {
    Triangulation t = doubled_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ManifoldReport r = check_closed_3_manifold(t);
        benchmark::DoNotOptimize(r.is_manifold);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_manifold_check)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_smith_dense(benchmark::State& state) {
    IntMatrix m = random_matrix(state.range(0), state.range(0), 12345u);
    for (auto _ : state) {
        SmithDecomposition s = smith_normal_form(m);
        benchmark::DoNotOptimize(s.d.rows());
    }
}
BENCHMARK(BM_smith_dense)->RangeMultiplier(2)->Range(8, 64);

void BM_homology(benchmark::State& state) {
    Triangulation t = doubled_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto groups = homology(t);
        benchmark::DoNotOptimize(groups.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_homology)->RangeMultiplier(4)->Range(8, 512)->Complexity();

} // namespace

BENCHMARK_MAIN();
