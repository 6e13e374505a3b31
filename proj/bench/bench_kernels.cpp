// Serial reference vs OpenMP kernels. The two flavours compute identical
// results (asserted in tests/test_kernels.cpp); this target measures what
// the parallel versions actually buy at various orders.
//
// Run: build/bench/bench_kernels [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "seidel/checks.hpp"
#include "seidel/coulson.hpp"
#include "seidel/kernels.hpp"
#include "seidel/seidel_matrix.hpp"

using namespace seidel;

namespace {

IntMatrix seidel_int(int n) {
    std::mt19937_64 rng(kDefaultCheckSeed);
    return seidel_matrix(random_graph(n, rng)).to_int_matrix();
}

RealMatrix random_orthogonal_ish(int n) {
    std::mt19937_64 rng(kDefaultCheckSeed + 1);
    RealMatrix w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w(i, j) = static_cast<double>(rng()) / static_cast<double>(rng.max()) - 0.5;
    return w;
}

std::vector<std::complex<double>> random_complex(int n) {
    std::mt19937_64 rng(kDefaultCheckSeed + 2);
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
    for (auto& z : a)
        z = {static_cast<double>(rng()) / static_cast<double>(rng.max()) - 0.5,
             static_cast<double>(rng()) / static_cast<double>(rng.max()) - 0.5};
    return a;
}

void bm_symmetric_square_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const IntMatrix a = seidel_int(n);
    IntMatrix c(n);
    for (auto _ : state) {
        kernels::symmetric_square_serial(a, c);
        benchmark::DoNotOptimize(c.data());
    }
}

void bm_symmetric_square_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const IntMatrix a = seidel_int(n);
    IntMatrix c(n);
    for (auto _ : state) {
        kernels::symmetric_square(a, c);
        benchmark::DoNotOptimize(c.data());
    }
}

void bm_weighted_gram_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RealMatrix w = random_orthogonal_ish(n);
    std::vector<double> d(static_cast<std::size_t>(n), 1.25);
    RealMatrix m(n);
    for (auto _ : state) {
        kernels::weighted_gram_serial(w, d, m);
        benchmark::DoNotOptimize(m.data());
    }
}

void bm_weighted_gram_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RealMatrix w = random_orthogonal_ish(n);
    std::vector<double> d(static_cast<std::size_t>(n), 1.25);
    RealMatrix m(n);
    for (auto _ : state) {
        kernels::weighted_gram(w, d, m);
        benchmark::DoNotOptimize(m.data());
    }
}

void bm_lu_determinant_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_complex(n);
    for (auto _ : state) {
        auto work = a;
        benchmark::DoNotOptimize(kernels::lu_determinant_serial(work, n));
    }
}

void bm_lu_determinant_omp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = random_complex(n);
    for (auto _ : state) {
        auto work = a;
        benchmark::DoNotOptimize(kernels::lu_determinant(work, n));
    }
}

void bm_coulson_energy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(kDefaultCheckSeed);
    const SeidelMatrix s = seidel_matrix(random_graph(n, rng));
    for (auto _ : state) benchmark::DoNotOptimize(coulson_energy(s, 0, {}).value);
}

BENCHMARK(bm_symmetric_square_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_symmetric_square_omp)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_weighted_gram_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_weighted_gram_omp)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_lu_determinant_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_lu_determinant_omp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_coulson_energy)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
