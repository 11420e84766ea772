#include <benchmark/benchmark.h>

#include <random>

#include "relbel/discrete_model.hpp"
#include "relbel/evidence.hpp"
#include "relbel/gaussian.hpp"

namespace {

using namespace relbel;

DiscreteModel synthetic_model(std::size_t nt, std::size_t nx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<Label> theta(nt), x(nx);
    for (std::size_t i = 0; i < nt; ++i) theta[i] = "t" + std::to_string(i);
    for (std::size_t j = 0; j < nx; ++j) x[j] = "x" + std::to_string(j);
    auto simplex = [&](std::size_t n) {
        std::vector<double> w(n);
        double total = 0.0;
        for (double& v : w) total += (v = 0.01 + exp1(rng));
        for (double& v : w) v /= total;
        return w;
    };
    std::vector<std::vector<double>> lik(nt);
    for (auto& row : lik) row = simplex(nx);
    return DiscreteModel(std::move(theta), simplex(nt), std::move(x), std::move(lik));
}

void BM_posterior(benchmark::State& state) {
    const DiscreteModel model = synthetic_model(state.range(0), 16, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(posterior(model, std::size_t{3}));
    }
}
BENCHMARK(BM_posterior)->Arg(64)->Arg(1024)->Arg(16384);

void BM_rb_marginal(benchmark::State& state) {
    const DiscreteModel model = synthetic_model(state.range(0), 16, 7);
    std::vector<Label> psi_of(model.n_theta());
    for (std::size_t i = 0; i < psi_of.size(); ++i) psi_of[i] = "p" + std::to_string(i % 32);
    const Marginalization marg(psi_of);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rb_marginal(model, marg, std::size_t{3}));
    }
}
BENCHMARK(BM_rb_marginal)->Arg(1024)->Arg(16384);

void BM_bf_event_scan(benchmark::State& state) {
    const DiscreteModel model = synthetic_model(8, 8, 11);
    for (auto _ : state) {
        double acc = 0.0;
        for (unsigned mask = 1; mask + 1 < (1u << 8); ++mask) {
            std::vector<bool> event(8);
            for (int b = 0; b < 8; ++b) event[b] = mask & (1u << b);
            acc += bf_event(model, event, std::size_t{0}).value;
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_bf_event_scan);

void BM_grid_bridge(benchmark::State& state) {
    NormalConjugateSpec spec;
    spec.mu0 = 0.0;
    spec.tau2 = 1.0;
    spec.alpha0 = 12.0;
    spec.beta0 = 12.0;
    spec.p = 0.5;
    spec.n = 16;
    SufficientStat stat{0.5, 466.0};
    const int cells = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_bridge(spec, stat, default_grid(spec, stat, cells)));
    }
}
BENCHMARK(BM_grid_bridge)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
