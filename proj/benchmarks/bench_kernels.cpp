// Serial vs OpenMP kernel comparison: sparse products, alternants and the
// Euler subset expansion. Not part of ctest; build and run perichar_bench.

#include <random>

#include <benchmark/benchmark.h>

#include "perichar/euler.hpp"
#include "perichar/schur.hpp"
#include "perichar/superchar.hpp"

namespace {

using namespace perichar;

LaurentPolynomial random_poly(std::uint64_t seed, int nvars, int nterms, std::int64_t max_exp) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> exp_dist(-max_exp, max_exp);
    std::uniform_int_distribution<int> coef_dist(-50, 50);
    LaurentPolynomial f(nvars);
    while (f.term_count() < static_cast<std::size_t>(nterms)) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = exp_dist(rng);
        const int c = coef_dist(rng);
        if (c != 0) f.add_term(e, c);
    }
    return f;
}

void BM_mul_serial(benchmark::State& state) {
    const auto f = random_poly(1, 6, static_cast<int>(state.range(0)), 4);
    const auto g = random_poly(2, 6, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(mul_serial(f, g));
}

void BM_mul_parallel(benchmark::State& state) {
    const auto f = random_poly(1, 6, static_cast<int>(state.range(0)), 4);
    const auto g = random_poly(2, 6, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(f, g));
}

void BM_alternant_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = 2 * (n - i);
    for (auto _ : state) benchmark::DoNotOptimize(alternant_serial(mu));
}

void BM_alternant_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mu[static_cast<std::size_t>(i)] = 2 * (n - i);
    for (auto _ : state) benchmark::DoNotOptimize(alternant_parallel(mu));
}

void BM_euler_serial(benchmark::State& state) {
    const Weight lambda{2, 2, 0, 0, 0};
    const std::vector<std::int64_t> gamma{0, 0, -1, -1, -1};
    for (auto _ : state) {
        detail::clear_schur_cache();
        benchmark::DoNotOptimize(euler_characteristic_serial(lambda, gamma));
    }
}

void BM_euler_parallel(benchmark::State& state) {
    const Weight lambda{2, 2, 0, 0, 0};
    const std::vector<std::int64_t> gamma{0, 0, -1, -1, -1};
    for (auto _ : state) {
        detail::clear_schur_cache();
        benchmark::DoNotOptimize(euler_characteristic(lambda, gamma));
    }
}

BENCHMARK(BM_mul_serial)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(400)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alternant_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alternant_parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_euler_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_euler_parallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
