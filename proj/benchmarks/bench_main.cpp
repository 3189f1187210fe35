#include <benchmark/benchmark.h>

#include <random>

#include "orbtop/construction.hpp"
#include "orbtop/hjcf.hpp"
#include "orbtop/int_matrix.hpp"
#include "orbtop/obstruction.hpp"

using namespace orbtop;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_SmithNormalForm6x6(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<IntMatrix> pool;
    for (int i = 0; i < 64; ++i) pool.push_back(random_matrix(rng, 6, 20));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(pool[k++ % pool.size()]));
    }
}
BENCHMARK(BM_SmithNormalForm6x6);

void BM_HjRoundTrip(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        for (long r = 1; r < d; ++r) {
            if (gcd_int(d, r) != 1) continue;
            benchmark::DoNotOptimize(hj_eval(hj_expand({d, r})));
        }
    }
}
BENCHMARK(BM_HjRoundTrip)->Arg(50)->Arg(500);

void BM_BuildConstruction(benchmark::State& state) {
    const std::size_t n = state.range(0);
    for (auto _ : state) {
        ConstructionModel c = assemble_orbifold(n);
        benchmark::DoNotOptimize(h2_total_space(c.bundle));
        benchmark::DoNotOptimize(
            abelianized_orbifold_pi1(pi1_relation_matrix(n, c.scheme)));
    }
}
BENCHMARK(BM_BuildConstruction)->Arg(0)->Arg(4);

void BM_DiophantineCompleteness(benchmark::State& state) {
    const long q = state.range(0);
    for (auto _ : state) {
        auto brute = diophantine_solutions_brute(q, 40, 100);
        auto family = diophantine_family_set(q, 40, 100);
        bool complete = true;
        for (const auto& t : brute) complete = complete && family.count(t) > 0;
        benchmark::DoNotOptimize(complete);
    }
}
BENCHMARK(BM_DiophantineCompleteness)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
