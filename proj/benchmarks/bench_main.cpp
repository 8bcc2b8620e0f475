#include <benchmark/benchmark.h>

#include <random>

#include "mpres/cover.hpp"
#include "mpres/fp_matrix.hpp"
#include "mpres/homology.hpp"
#include "mpres/resolution.hpp"
#include "mpres/subdivision.hpp"
#include "mpres/tower.hpp"

using namespace mpres;

namespace {

FpMatrix random_matrix(std::uint32_t p, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m.set(r, c, value(rng));
        }
    }
    return m;
}

ComplexPtr torus() {
    std::vector<std::vector<Vertex>> tris;
    for (Vertex i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return closure_from_maximal(tris);
}

void BM_Rref(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    FpMatrix m = random_matrix(p, static_cast<std::size_t>(state.range(1)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref_rank(m).rank);
    }
}
BENCHMARK(BM_Rref)->Args({2, 256})->Args({2, 1024})->Args({3, 256})->Args({3, 512});

void BM_HomologySubdividedTorus(benchmark::State& state) {
    ComplexPtr k = torus();
    for (int i = 0; i < state.range(0); ++i) {
        k = barycentric_subdivision(*k).complex;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_basis(*k, 1, 2).rank);
    }
    state.counters["simplices"] = static_cast<double>(k->total_count());
}
BENCHMARK(BM_HomologySubdividedTorus)->Arg(0)->Arg(1)->Arg(2);

void BM_CoverTorus(benchmark::State& state) {
    ComplexPtr k = torus();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_cover(k, static_cast<std::uint32_t>(state.range(0))).total);
    }
}
BENCHMARK(BM_CoverTorus)->Arg(2)->Arg(3)->Arg(5);

void BM_ResolveTorus(benchmark::State& state) {
    ComplexPtr k = torus();
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve(k, 2).generator_count());
    }
}
BENCHMARK(BM_ResolveTorus)->Unit(benchmark::kMillisecond);

void BM_TowerTriangleDepth2(benchmark::State& state) {
    ComplexPtr k = closure_from_maximal({{0, 1, 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tower(k, 2, 2).size());
    }
}
BENCHMARK(BM_TowerTriangleDepth2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
