#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel::testing {

// Two-point model used throughout: informative likelihood, symmetric prior.
inline DiscreteModel model_m1() {
    return DiscreteModel({"t1", "t2"}, {0.5, 0.5}, {"x1", "x2"},
                         {{0.8, 0.2}, {0.2, 0.8}});
}

// Three-point model with a two-to-one marginalization (a, b -> p0; c -> p1).
inline DiscreteModel model_m2() {
    return DiscreteModel({"a", "b", "c"}, {0.25, 0.25, 0.5}, {"x1", "x2"},
                         {{0.6, 0.4}, {0.2, 0.8}, {0.9, 0.1}});
}

inline Marginalization marg_m2() { return Marginalization({"p0", "p0", "p1"}); }

// Uniform-likelihood model: data carry no information.
inline DiscreteModel model_flat() {
    return DiscreteModel({"t1", "t2"}, {0.5, 0.5}, {"x1", "x2"},
                         {{0.5, 0.5}, {0.5, 0.5}});
}

// Positive weights summing to one, floored away from zero so every identity
// that divides by prior or posterior mass stays well conditioned.
inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n,
                                          double floor = 0.02) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (double& v : w) {
        v = floor + exp1(rng);
        total += v;
    }
    for (double& v : w) v /= total;
    return w;
}

inline DiscreteModel random_model(std::mt19937_64& rng, std::size_t max_theta = 8,
                                  std::size_t max_x = 8) {
    std::uniform_int_distribution<std::size_t> theta_count(2, max_theta);
    std::uniform_int_distribution<std::size_t> x_count(2, max_x);
    const std::size_t nt = theta_count(rng);
    const std::size_t nx = x_count(rng);
    std::vector<Label> theta(nt), x(nx);
    for (std::size_t i = 0; i < nt; ++i) theta[i] = "t" + std::to_string(i);
    for (std::size_t j = 0; j < nx; ++j) x[j] = "x" + std::to_string(j);
    std::vector<std::vector<double>> lik(nt);
    for (auto& row : lik) row = random_simplex(rng, nx);
    return DiscreteModel(std::move(theta), random_simplex(rng, nt), std::move(x), std::move(lik));
}

// Surjective map onto 1..n_theta psi values; every psi gets a preimage.
inline Marginalization random_marginalization(std::mt19937_64& rng, const DiscreteModel& model) {
    const std::size_t nt = model.n_theta();
    std::uniform_int_distribution<std::size_t> psi_count(1, nt);
    const std::size_t np = psi_count(rng);
    std::vector<Label> psi_of(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t k = i < np ? i : std::uniform_int_distribution<std::size_t>(0, np - 1)(rng);
        psi_of[i] = "p" + std::to_string(k);
    }
    return Marginalization(std::move(psi_of));
}

}  // namespace relbel::testing
