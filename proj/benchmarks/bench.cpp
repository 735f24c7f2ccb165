#include <benchmark/benchmark.h>

#include "aer/field.hpp"
#include "aer/matrix.hpp"
#include "aer/order.hpp"

namespace {

using namespace aer;

void BM_FieldMul(benchmark::State& state) {
    gf256::Elem a = 0x57, b = 0x83;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a = gf256::mul(a, b));
    }
}
BENCHMARK(BM_FieldMul);

void BM_MatMul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SeededRng rng(7);
    Matrix x = Matrix::random(n, rng);
    Matrix y = Matrix::random(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x = mat_mul(x, y));
    }
}
BENCHMARK(BM_MatMul)->Arg(2)->Arg(3)->Arg(8);

void BM_LimitPower(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SeededRng rng(7);
    Matrix x = Matrix::random(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_shortcut(x));
    }
}
BENCHMARK(BM_LimitPower)->Arg(2)->Arg(3);

void BM_BrentCycle(benchmark::State& state) {
    SeededRng rng(static_cast<std::uint64_t>(state.range(0)));
    Matrix x = Matrix::random(2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brent_cycle(x));
    }
}
BENCHMARK(BM_BrentCycle)->Arg(1)->Arg(2);

void BM_FloydCycle(benchmark::State& state) {
    SeededRng rng(static_cast<std::uint64_t>(state.range(0)));
    Matrix x = Matrix::random(2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(floyd_cycle(x));
    }
}
BENCHMARK(BM_FloydCycle)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
