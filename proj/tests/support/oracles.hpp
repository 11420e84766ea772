#pragma once

// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes its target from first principles (plain loops over the model
// data) so a defect in the library cannot hide inside its own checker.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel::testing {

// ---- brute-force discrete probability, independent of the library ops ----

inline double oracle_predictive(const DiscreteModel& model, const std::vector<double>& weights,
                                std::size_t x_idx) {
    double m = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) m += weights[i] * model.likelihood(i, x_idx);
    return m;
}

inline std::vector<double> oracle_posterior(const DiscreteModel& model,
                                            const std::vector<double>& weights,
                                            std::size_t x_idx) {
    const double m = oracle_predictive(model, weights, x_idx);
    std::vector<double> post(weights.size());
    for (std::size_t i = 0; i < post.size(); ++i) {
        post[i] = weights[i] * model.likelihood(i, x_idx) / m;
    }
    return post;
}

inline double oracle_rb_point(const DiscreteModel& model, const std::vector<double>& weights,
                              std::size_t i0, std::size_t x_idx) {
    return oracle_posterior(model, weights, x_idx)[i0] / weights[i0];
}

inline double oracle_bf_point(const DiscreteModel& model, const std::vector<double>& weights,
                              std::size_t i0, std::size_t x_idx) {
    const std::vector<double> post = oracle_posterior(model, weights, x_idx);
    return (post[i0] / (1.0 - post[i0])) / (weights[i0] / (1.0 - weights[i0]));
}

// ---- contaminated priors, recomputed from the displayed formulas ----

inline std::vector<double> oracle_linear_prior(const DiscreteModel& model,
                                               const std::vector<double>& q_unnormalized,
                                               double eps) {
    double cq = 0.0;
    for (double v : q_unnormalized) cq += v;
    const double denom = 1.0 - eps + eps * cq;
    std::vector<double> w(model.n_theta());
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = ((1.0 - eps) * model.prior_at(i) + eps * q_unnormalized[i]) / denom;
        if (w[i] < 0.0) throw std::domain_error("negative weight in linear path");
        total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
}

inline std::vector<double> oracle_geometric_prior(const DiscreteModel& model,
                                                  const std::vector<double>& q, double eps) {
    std::vector<double> w(model.n_theta());
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double pi = model.prior_at(i);
        w[i] = pi > 0.0 ? std::pow(q[i] / pi, eps) * pi : 0.0;
        total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
}

// Central differences with one Richardson step, h in {1e-3, 1e-4}. Falls back
// to one-sided second-order differences when negative eps is unusable.
inline double fd_richardson(const std::function<double(double)>& f) {
    bool central = true;
    try {
        (void)f(-1e-3);
    } catch (const std::exception&) {
        central = false;
    }
    auto diff = [&](double h) {
        if (central) return (f(h) - f(-h)) / (2.0 * h);
        return (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
    };
    const double d1 = diff(1e-3);
    const double d2 = diff(1e-4);
    return (100.0 * d2 - d1) / 99.0;
}

// ---- one-dimensional adaptive Simpson quadrature ----

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Integrates over consecutive panels given by knots, with a trapezoid prepass
// to set the absolute tolerance from the integral's own scale.
double integrate_panels(const std::function<double(double)>& f, std::vector<double> knots,
                        double rel_tol);

// ---- Gaussian conjugate densities (plain formulas, no library calls) ----

struct GaussPoint {
    double xbar, s2;
    int n;
    double mu0, tau2, alpha0, beta0;
};

double gauss_log_lik(const GaussPoint& g, double mu, double sig2);
double gauss_log_prior_mu(const GaussPoint& g, double mu, double sig2);
double gauss_log_ig(double sig2, double a, double b);

// Prior predictive density of (xbar, s2) under the full continuous prior.
double gauss_m_full(const GaussPoint& g);
// Prior predictive under the spike (mu fixed at mu0, sigma2 from its prior).
double gauss_m_spike(const GaussPoint& g);
// Marginal prior/posterior density ratio of mu at mu0.
double gauss_rb_quadrature(const GaussPoint& g);
// Same quantity through the conditional-prior-predictive route.
double gauss_rb_savage_dickey(const GaussPoint& g);

}  // namespace relbel::testing
