#include <benchmark/benchmark.h>

#include <random>

#include "twalg/algebra.hpp"

using namespace twalg;

namespace {

AlgebraElement random_element(const CocyclePtr& f, std::mt19937& rng) {
    std::normal_distribution<double> nd;
    std::vector<RingValue> c;
    for (int t = 0; t < f->order(); ++t) c.push_back(complex_value({nd(rng), nd(rng)}));
    return AlgebraElement(f, std::move(c));
}

void BM_CyclicMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<RingValue> alpha;
    for (int j = 1; j < n; ++j) alpha.push_back(complex_value(std::polar(1.0, 0.3 * j)));
    auto f = std::make_shared<SchurFunction>(make_f_alpha(n, alpha, desc::complex_scalar()));
    std::mt19937 rng(7);
    const AlgebraElement x = random_element(f, rng), y = random_element(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(alg_mul(x, y));
}
BENCHMARK(BM_CyclicMul)->Arg(4)->Arg(16)->Arg(64);

void BM_CyclicNorm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto f = std::make_shared<SchurFunction>(trivial_cocycle(make_cyclic(n), desc::complex_scalar()));
    std::mt19937 rng(11);
    const AlgebraElement x = random_element(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(alg_norm(x));
}
BENCHMARK(BM_CyclicNorm)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
