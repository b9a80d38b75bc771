#include <benchmark/benchmark.h>

#include <random>

#include "orthopoly/decomp.hpp"
#include "orthopoly/expand.hpp"
#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"
#include "orthopoly/subproduct_tree.hpp"

using namespace orthopoly;

namespace {

std::vector<Fp> random_vec(const Field& F, std::size_t n, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<Fp> out(n);
    for (Fp& x : out) x = F.from_uint(rng());
    return out;
}

RecurrenceFamily random_family(const Field& F, std::size_t len, u64 seed) {
    std::mt19937_64 rng(seed);
    auto nonzero = [&] {
        Fp x;
        do {
            x = F.from_uint(rng());
        } while (x.v == 0);
        return x;
    };
    std::vector<Fp> a(len), b(len), c(len);
    for (std::size_t i = 0; i < len; ++i) {
        a[i] = nonzero();
        b[i] = F.from_uint(rng());
        c[i] = nonzero();
    }
    return RecurrenceFamily::custom(F, std::move(a), std::move(b), std::move(c));
}

} // namespace

static void BM_PolyMul(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Poly a = random_vec(F, n, 1);
    Poly b = random_vec(F, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poly_mul(F, a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(2)->Range(1 << 8, 1 << 16)->Complexity();

static void BM_BuildTree(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tree(fam, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTree)->RangeMultiplier(2)->Range(1 << 8, 1 << 14)->Complexity();

static void BM_Expand(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 4);
    std::vector<Fp> alpha = random_vec(F, n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(fam, alpha));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Expand)->RangeMultiplier(2)->Range(1 << 8, 1 << 15)->Complexity();

static void BM_NaiveExpand(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 6);
    std::vector<Fp> alpha = random_vec(F, n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(naive_expand(fam, alpha));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveExpand)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

static void BM_ExpandTransposed(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 8);
    std::vector<Fp> u = random_vec(F, n, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_transposed(fam, u));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandTransposed)->RangeMultiplier(2)->Range(1 << 8, 1 << 15)->Complexity();

static void BM_Decomp(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 10);
    Poly a = random_vec(F, n, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decomp(fam, a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decomp)->RangeMultiplier(2)->Range(1 << 8, 1 << 15)->Complexity();

static void BM_MomentSeries(benchmark::State& state) {
    Field F;
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto fam = random_family(F, n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment_series(fam, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MomentSeries)->RangeMultiplier(2)->Range(1 << 8, 1 << 14)->Complexity();

BENCHMARK_MAIN();
