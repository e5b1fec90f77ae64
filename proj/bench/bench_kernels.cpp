// Serial reference vs OpenMP for the parallel kernels.
// Arg 0 selects the policy (0 serial, 1 parallel).

#include "frontgate/barrier.hpp"
#include "frontgate/pde.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace frontgate;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
    return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

std::vector<double> sample_field(std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = 0.5 * (1.0 - std::tanh((static_cast<double>(i) - n / 2.0) / 50.0));
    return p;
}

void BM_reaction_step(benchmark::State& state) {
    const auto model = make_wolbachia_f(WolbachiaParams{});
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto p = sample_field(n);
    std::vector<double> out(n);
    for (auto _ : state) {
        reaction_step(model, p, 0.05, out, policy_of(state));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_gradient_term_step(benchmark::State& state) {
    const auto law = make_wolbachia_h(WolbachiaParams{}).normalized();
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto p = sample_field(n);
    std::vector<double> out(n);
    for (auto _ : state) {
        gradient_term_step(law, p, 0.025, 0.02, out, policy_of(state));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_lstar_curve(benchmark::State& state) {
    const auto model = make_cubic(0.25);
    std::vector<double> Cs;
    for (int i = 0; i < 16; ++i) Cs.push_back(0.5 * std::pow(40.0, i / 15.0));
    for (auto _ : state) {
        auto curve = lstar_curve(model, Cs, policy_of(state));
        benchmark::DoNotOptimize(curve.half_length.data());
    }
}

// Independent blocking runs over a range of C, as in a parameter sweep.
void BM_simulation_sweep(benchmark::State& state) {
    const auto model = make_cubic(0.25);
    const auto grid = Grid1D::make(-20.0, 20.0, 0.1);
    SimulationOptions options;
    options.T = 50.0;
    const std::size_t runs = 8;
    for (auto _ : state) {
        std::vector<int> outcome(runs);
        for_each_index(runs, policy_of(state), [&](std::size_t i) {
            const double C = 0.5 + 0.25 * static_cast<double>(i);
            auto r = simulate_heterogeneous(model, GradientProfile::interval_constant(C, 1.0), InitialDatum::front(-14.0),
                                            grid, options);
            outcome[i] = static_cast<int>(r.outcome);
        });
        benchmark::DoNotOptimize(outcome.data());
    }
}

}  // namespace

BENCHMARK(BM_reaction_step)->ArgsProduct({{0, 1}, {1 << 12, 1 << 18}});
BENCHMARK(BM_gradient_term_step)->ArgsProduct({{0, 1}, {1 << 12, 1 << 18}});
BENCHMARK(BM_lstar_curve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simulation_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
