#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace relbel::testing {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double integrate_panels(const std::function<double(double)>& f, std::vector<double> knots,
                        double rel_tol) {
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    double scale = 0.0;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        const double a = knots[k];
        const double b = knots[k + 1];
        const int steps = 16;
        const double h = (b - a) / steps;
        double acc = 0.5 * (f(a) + f(b));
        for (int i = 1; i < steps; ++i) acc += f(a + i * h);
        scale += std::abs(acc * h);
    }
    const double tol = std::max(scale, 1e-300) * rel_tol;
    double total = 0.0;
    const double per_panel = tol / static_cast<double>(knots.size());
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
        total += adaptive_simpson(f, knots[k], knots[k + 1], per_panel);
    }
    return total;
}

double gauss_log_ig(double sig2, double a, double b) {
    return a * std::log(b) - std::lgamma(a) - (a + 1.0) * std::log(sig2) - b / sig2;
}

double gauss_log_lik(const GaussPoint& g, double mu, double sig2) {
    const double var = sig2 / g.n;
    const double d = g.xbar - mu;
    double v = -0.5 * (kLog2Pi + std::log(var) + d * d / var);
    if (g.n >= 2) {
        const double k = g.n - 1.0;
        const double z = g.s2 / sig2;
        v += (0.5 * k - 1.0) * std::log(z) - 0.5 * z - std::lgamma(0.5 * k) -
             0.5 * k * std::log(2.0) - std::log(sig2);
    }
    return v;
}

double gauss_log_prior_mu(const GaussPoint& g, double mu, double sig2) {
    const double var = g.tau2 * sig2;
    const double d = mu - g.mu0;
    return -0.5 * (kLog2Pi + std::log(var) + d * d / var);
}

namespace {

// Knots for the log-sigma2 axis: both prior and posterior bulks plus a tail
// allowance wide enough for small alpha0 (polynomial right tail).
std::vector<double> sigma_knots(const GaussPoint& g) {
    const double kappa_n = g.n + 1.0 / g.tau2;
    const double d = g.xbar - g.mu0;
    const double beta_x = (g.n * d * d / g.tau2) / kappa_n + g.s2 + 2.0 * g.beta0;
    const double lo = std::min(std::log(g.beta0), std::log(0.5 * beta_x)) - 10.0;
    const double hi = std::max(std::log(g.beta0), std::log(std::max(0.5 * beta_x, 1e-12))) +
                      26.0 / (g.alpha0 + 0.5) + 8.0;
    std::vector<double> knots{lo, std::log(g.beta0 / (g.alpha0 + 1.0)),
                              std::log(beta_x / (g.n + 2.0 * g.alpha0 + 2.0)), hi};
    knots.push_back(0.5 * (lo + hi));
    return knots;
}

std::vector<double> mu_knots(const GaussPoint& g, double sig2) {
    const double sd_lik = std::sqrt(sig2 / g.n);
    const double sd_prior = std::sqrt(g.tau2 * sig2);
    return {g.xbar - 10.0 * sd_lik, g.xbar,         g.xbar + 10.0 * sd_lik,
            g.mu0 - 10.0 * sd_prior, g.mu0,         g.mu0 + 10.0 * sd_prior};
}

}  // namespace

double gauss_m_full(const GaussPoint& g) {
    auto outer = [&](double u) {
        const double sig2 = std::exp(u);
        auto inner = [&](double mu) {
            return std::exp(gauss_log_lik(g, mu, sig2) + gauss_log_prior_mu(g, mu, sig2));
        };
        const double mu_int = integrate_panels(inner, mu_knots(g, sig2), 1e-10);
        return mu_int * std::exp(gauss_log_ig(sig2, g.alpha0, g.beta0) + u);
    };
    return integrate_panels(outer, sigma_knots(g), 1e-10);
}

double gauss_m_spike(const GaussPoint& g) {
    auto outer = [&](double u) {
        const double sig2 = std::exp(u);
        return std::exp(gauss_log_lik(g, g.mu0, sig2) + gauss_log_ig(sig2, g.alpha0, g.beta0) + u);
    };
    return integrate_panels(outer, sigma_knots(g), 1e-11);
}

double gauss_rb_quadrature(const GaussPoint& g) {
    // posterior marginal density of mu at mu0
    auto post_num = [&](double u) {
        const double sig2 = std::exp(u);
        return std::exp(gauss_log_lik(g, g.mu0, sig2) + gauss_log_prior_mu(g, g.mu0, sig2) +
                        gauss_log_ig(sig2, g.alpha0, g.beta0) + u);
    };
    const double numerator = integrate_panels(post_num, sigma_knots(g), 1e-11);
    const double post_dens = numerator / gauss_m_full(g);
    // prior marginal density of mu at mu0
    auto prior_dens_f = [&](double u) {
        const double sig2 = std::exp(u);
        return std::exp(gauss_log_prior_mu(g, g.mu0, sig2) +
                        gauss_log_ig(sig2, g.alpha0, g.beta0) + u);
    };
    const double prior_dens = integrate_panels(prior_dens_f, sigma_knots(g), 1e-11);
    return post_dens / prior_dens;
}

double gauss_rb_savage_dickey(const GaussPoint& g) {
    // conditional prior of sigma2 given mu = mu0 is inverse-gamma with shape
    // alpha0 + 1/2 and the same scale
    auto num_f = [&](double u) {
        const double sig2 = std::exp(u);
        return std::exp(gauss_log_lik(g, g.mu0, sig2) +
                        gauss_log_ig(sig2, g.alpha0 + 0.5, g.beta0) + u);
    };
    const double numerator = integrate_panels(num_f, sigma_knots(g), 1e-11);
    return numerator / gauss_m_full(g);
}

}  // namespace relbel::testing
