// Parallel kernels against the serial reference implementations.
#include <benchmark/benchmark.h>

#include <random>

#include "infnet/reference.hpp"

using namespace infnet;

namespace {

InfluenceNetwork layered_network(std::size_t events) {
    std::mt19937_64 rng(3);
    InfluenceNetwork net(ConnectivityMode::general);
    net.add_chain("P");
    net.add_chain("Q");
    std::vector<EventId> ids;
    for (std::size_t i = 0; i < events; ++i) {
        if (i % 3 == 2) {
            ids.push_back(net.add_event());
        } else {
            ids.push_back(net.add_event(i % 3 == 0 ? "P" : "Q"));
        }
    }
    for (std::size_t i = 0; i < events * 2; ++i) {
        const std::size_t a = rng() % events;
        const std::size_t b = rng() % events;
        if (a >= b) continue;
        try {
            net.add_influence(ids[a], ids[b]);
        } catch (const Error&) {
        }
    }
    net.finalize();
    return net;
}

void BM_closure_parallel(benchmark::State& state) {
    const auto net = layered_network(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(transitive_closure(net.successors()));
}

void BM_closure_reference(benchmark::State& state) {
    const auto net = layered_network(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::transitive_closure(net.successors()));
}

void BM_reduction_parallel(benchmark::State& state) {
    const auto net = layered_network(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(transitive_reduction(net));
}

void BM_reduction_reference(benchmark::State& state) {
    const auto net = layered_network(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::transitive_reduction(net));
}

void BM_enumerate_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_sequences(n / 2, n - n / 2));
}

void BM_enumerate_reference(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_sequences(n / 2, n - n / 2));
}

void BM_propagate_parallel(benchmark::State& state) {
    const TransferMatrices tm;
    for (auto _ : state) {
        SpinorField f = SpinorField::point_source(Symbol::P);
        for (std::int64_t i = 0; i < state.range(0); ++i) f = step_field(f, tm);
        benchmark::DoNotOptimize(f);
    }
}

void BM_propagate_reference(benchmark::State& state) {
    const TransferMatrices tm;
    for (auto _ : state) {
        SpinorField f = SpinorField::point_source(Symbol::P);
        for (std::int64_t i = 0; i < state.range(0); ++i) f = reference::step_field(f, tm);
        benchmark::DoNotOptimize(f);
    }
}

void BM_path_sum_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(path_sum_kernel(Symbol::P, {}, Symbol::P, {}, n, default_theta));
}

void BM_path_sum_reference(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::path_sum_kernel(Symbol::P, {}, Symbol::P, {}, n, default_theta));
}

void BM_sample_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sample_beta(1000, 0.3, 1, static_cast<std::size_t>(state.range(0))));
}

void BM_sample_reference(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::sample_beta(1000, 0.3, 1, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_closure_parallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_closure_reference)->Arg(500)->Arg(2000);
BENCHMARK(BM_reduction_parallel)->Arg(300);
BENCHMARK(BM_reduction_reference)->Arg(300);
BENCHMARK(BM_enumerate_parallel)->Arg(16)->Arg(20);
BENCHMARK(BM_enumerate_reference)->Arg(16)->Arg(20);
BENCHMARK(BM_propagate_parallel)->Arg(200)->Arg(1000);
BENCHMARK(BM_propagate_reference)->Arg(200)->Arg(1000);
BENCHMARK(BM_path_sum_parallel)->Arg(16)->Arg(20);
BENCHMARK(BM_path_sum_reference)->Arg(12)->Arg(16);
BENCHMARK(BM_sample_parallel)->Arg(1000);
BENCHMARK(BM_sample_reference)->Arg(1000);

BENCHMARK_MAIN();
