// Serial reference kernels against their OpenMP versions, per kernel and for
// a whole edge evaluation. Thread count follows OMP_NUM_THREADS.

#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "treeqaoa/engine.hpp"
#include "treeqaoa/kernels.hpp"
#include "treeqaoa/schedule.hpp"

using namespace treeqaoa;
using kernels::cplx;

namespace {

std::vector<cplx> random_message(int p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> x(std::size_t{1} << (2 * p));
    for (auto &z : x)
        z = {u(rng), u(rng)};
    return x;
}

struct Amps {
    std::vector<cplx> a0, a1;
    explicit Amps(int p) : a0(random_message(p, 3)), a1(random_message(p, 4)) {
        a0.resize(std::size_t{1} << p);
        a1.resize(std::size_t{1} << p);
    }
    kernels::VertexWeight weight() const { return {a0, a1, 1.0, 1.0}; }
};

template <auto Fn>
void power_and_weight(benchmark::State &state) {
    const int p = static_cast<int>(state.range(0));
    const auto base = random_message(p, 1);
    const Amps amps(p);
    auto x = base;
    for (auto _ : state) {
        state.PauseTiming();
        x = base;
        state.ResumeTiming();
        Fn(x, p, 2, amps.weight());
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(base.size()));
}

template <auto Fn>
void exchange_layer(benchmark::State &state) {
    const int p = static_cast<int>(state.range(0));
    auto x = random_message(p, 1);
    for (auto _ : state) {
        for (int t = 0; t < p; ++t)
            Fn(x, p, t, 0.3);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * p * static_cast<std::int64_t>(x.size()));
}

template <auto Fn>
void bilinear_sum(benchmark::State &state) {
    const int p = static_cast<int>(state.range(0));
    const auto a = random_message(p, 1);
    const auto b = random_message(p, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(Fn(a, b));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <Backend B>
void edge_expectation(benchmark::State &state) {
    const int p = static_cast<int>(state.range(0));
    const ParamSet params = random_init(p, 3, true, 11);
    EngineOptions opts;
    opts.backend = B;
    for (auto _ : state)
        benchmark::DoNotOptimize(treeqaoa::edge_expectation(params, opts).zz);
}

} // namespace

BENCHMARK(power_and_weight<kernels::serial::power_and_weight>)->Name("power_and_weight/serial")->DenseRange(6, 10, 2);
BENCHMARK(power_and_weight<kernels::parallel::power_and_weight>)->Name("power_and_weight/parallel")->DenseRange(6, 10, 2);
BENCHMARK(exchange_layer<kernels::serial::exchange_layer>)->Name("exchange_layer/serial")->DenseRange(6, 10, 2);
BENCHMARK(exchange_layer<kernels::parallel::exchange_layer>)->Name("exchange_layer/parallel")->DenseRange(6, 10, 2);
BENCHMARK(bilinear_sum<kernels::serial::bilinear_sum>)->Name("bilinear_sum/serial")->DenseRange(6, 10, 2);
BENCHMARK(bilinear_sum<kernels::parallel::bilinear_sum>)->Name("bilinear_sum/parallel")->DenseRange(6, 10, 2);
BENCHMARK(edge_expectation<Backend::serial>)->Name("edge_expectation/serial")->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(edge_expectation<Backend::parallel>)->Name("edge_expectation/parallel")->DenseRange(4, 9, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
