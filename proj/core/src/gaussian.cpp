#include "relbel/gaussian.hpp"

#include <cmath>
#include <limits>

#include "relbel/errors.hpp"
#include "relbel/numeric.hpp"

namespace relbel {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

struct PosteriorParams {
    double kappa_n;   // n + 1/tau2
    double mu_x;      // posterior location of mu
    double beta_x;    // twice the posterior rate of sigma^2
    double nu_n;      // posterior Student degrees of freedom, n + 2 alpha0
};

PosteriorParams posterior_params(const NormalConjugateSpec& spec, const SufficientStat& stat) {
    PosteriorParams p;
    const double kappa0 = 1.0 / spec.tau2;
    p.kappa_n = spec.n + kappa0;
    const double d = stat.xbar - spec.mu0;
    p.mu_x = spec.mu0 + spec.n * d / p.kappa_n;
    p.beta_x = (spec.n * d * d / spec.tau2) / p.kappa_n + stat.s2 + 2.0 * spec.beta0;
    p.nu_n = spec.n + 2.0 * spec.alpha0;
    return p;
}

double log_norm_pdf(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (kLog2Pi + std::log(var) + d * d / var);
}

double log_inv_gamma_pdf(double s2, double a, double b) {
    return a * std::log(b) - std::lgamma(a) - (a + 1.0) * std::log(s2) - b / s2;
}

double log_chi2_pdf(double x, double k) {
    return (0.5 * k - 1.0) * std::log(x) - 0.5 * x - std::lgamma(0.5 * k) -
           0.5 * k * std::log(2.0);
}

// log density of the sufficient statistic at (mu, sigma2); for n = 1 the s2
// component is degenerate at zero and contributes nothing to ratios.
double log_lik_stat(const NormalConjugateSpec& spec, const SufficientStat& stat, double mu,
                    double s2cell) {
    double v = log_norm_pdf(stat.xbar, mu, s2cell / spec.n);
    if (spec.n >= 2) v += log_chi2_pdf(stat.s2 / s2cell, spec.n - 1.0) - std::log(s2cell);
    return v;
}

}  // namespace

void NormalConjugateSpec::validate() const {
    if (!(tau2 > 0.0)) throw ValidationError("tau2 must be positive");
    if (!(alpha0 > 0.0)) throw ValidationError("alpha0 must be positive");
    if (!(beta0 > 0.0)) throw ValidationError("beta0 must be positive");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("mixture weight p must be in (0,1)");
    if (n < 1) throw ValidationError("sample size n must be positive");
    if (!std::isfinite(mu0)) throw ValidationError("mu0 must be finite");
}

void SufficientStat::validate() const {
    if (!std::isfinite(xbar)) throw ValidationError("xbar must be finite");
    if (!(s2 >= 0.0) || !std::isfinite(s2)) throw ValidationError("s2 must be nonnegative");
}

double bf_normal(const NormalConjugateSpec& spec, const SufficientStat& stat) {
    spec.validate();
    stat.validate();
    const double d2 = stat.xbar - spec.mu0;
    const double nd2 = spec.n * d2 * d2;
    const double denom = nd2 + stat.s2 + 2.0 * spec.beta0;
    if (!(denom > 0.0)) {
        throw DegenerateData("bf_normal undefined: n(xbar-mu0)^2 + s2 + 2 beta0 is zero");
    }
    const double shrink = 1.0 + spec.n * spec.tau2;
    const double bracket = (nd2 / shrink + stat.s2 + 2.0 * spec.beta0) / denom;
    // log-space power keeps large n / alpha0 away from overflow
    return std::sqrt(shrink) * std::exp((0.5 * spec.n + spec.alpha0) * std::log(bracket));
}

double rb_normal(const NormalConjugateSpec& spec, const SufficientStat& stat) {
    spec.validate();
    stat.validate();
    const PosteriorParams pp = posterior_params(spec, stat);
    if (!(pp.beta_x > 0.0)) {
        throw DegenerateData("rb_normal undefined: posterior scale collapsed to zero");
    }
    // Marginal prior and posterior of mu are Student; the ratio of their
    // densities at mu0 in log space via lgamma differences.
    const double nu0 = 2.0 * spec.alpha0;
    const double lam0_sq = spec.tau2 * spec.beta0 / spec.alpha0;
    const double lamn_sq = pp.beta_x / (pp.nu_n * pp.kappa_n);
    const double dd = spec.mu0 - pp.mu_x;

    double lg = std::lgamma(0.5 * (pp.nu_n + 1.0)) - std::lgamma(0.5 * pp.nu_n) -
                std::lgamma(0.5 * (nu0 + 1.0)) + std::lgamma(0.5 * nu0);
    lg += 0.5 * (std::log(nu0) + std::log(lam0_sq) - std::log(pp.nu_n) - std::log(lamn_sq));
    lg += -0.5 * (pp.nu_n + 1.0) * std::log1p(dd * dd / (pp.nu_n * lamn_sq));
    return std::exp(lg);
}

double info_inconsistency_limit(const NormalConjugateSpec& spec) {
    spec.validate();
    const double shrink = 1.0 + spec.n * spec.tau2;
    return std::exp((-0.5 * spec.n - spec.alpha0 + 0.5) * std::log(shrink));
}

std::vector<DiffuseRow> diffuse_scan(const NormalConjugateSpec& spec, const SufficientStat& stat,
                                     const std::vector<double>& tau2_grid) {
    std::vector<DiffuseRow> rows;
    rows.reserve(tau2_grid.size());
    for (double t2 : tau2_grid) {
        NormalConjugateSpec s = spec;
        s.tau2 = t2;
        rows.push_back({t2, bf_normal(s, stat), rb_normal(s, stat)});
    }
    return rows;
}

namespace {

GridSpec make_grid(const NormalConjugateSpec& spec, const SufficientStat& stat, int cells,
                   double sd_mult, double s2_tail) {
    spec.validate();
    stat.validate();
    if (cells < 1) throw ValidationError("grid needs at least one cell per axis");
    const PosteriorParams pp = posterior_params(spec, stat);
    const double lamn = std::sqrt(pp.beta_x / (pp.nu_n * pp.kappa_n));
    const double post_sd = pp.nu_n > 2.5 ? lamn * std::sqrt(pp.nu_n / (pp.nu_n - 2.0)) : 3.0 * lamn;

    GridSpec g;
    g.mu_lo = pp.mu_x - sd_mult * post_sd;
    g.mu_hi = pp.mu_x + sd_mult * post_sd;
    g.mu_cells = cells;
    const double alpha_n = spec.alpha0 + 0.5 * spec.n;
    const double lo = std::min(inv_gamma_quantile(spec.alpha0, spec.beta0, s2_tail),
                               inv_gamma_quantile(alpha_n, 0.5 * pp.beta_x, s2_tail));
    const double hi = std::max(inv_gamma_quantile(spec.alpha0, spec.beta0, 1.0 - s2_tail),
                               inv_gamma_quantile(alpha_n, 0.5 * pp.beta_x, 1.0 - s2_tail));
    g.log_s2_lo = std::log(lo);
    g.log_s2_hi = std::log(hi);
    g.s2_cells = cells;
    return g;
}

}  // namespace

GridSpec default_grid(const NormalConjugateSpec& spec, const SufficientStat& stat, int cells) {
    return make_grid(spec, stat, cells, 8.0, 0.5e-4);
}

GridSpec wide_grid(const NormalConjugateSpec& spec, const SufficientStat& stat, int cells) {
    return make_grid(spec, stat, cells, 14.0, 1e-9);
}

GridModel grid_bridge(const NormalConjugateSpec& spec, const SufficientStat& stat,
                      const GridSpec& grid) {
    spec.validate();
    stat.validate();
    if (grid.mu_cells < 1 || grid.s2_cells < 1) {
        throw ValidationError("grid needs at least one cell per axis");
    }
    if (!(grid.mu_hi > grid.mu_lo) || !(grid.log_s2_hi > grid.log_s2_lo)) {
        throw ValidationError("grid window is empty");
    }

    // Align the mu grid so mu0 sits exactly at a cell midpoint.
    const double h = (grid.mu_hi - grid.mu_lo) / grid.mu_cells;
    double left;
    if (grid.mu_cells > 1) {
        left = spec.mu0 - (std::floor((spec.mu0 - grid.mu_lo) / h - 0.5) + 0.5) * h;
    } else {
        left = spec.mu0 - 0.5 * h;
    }
    std::vector<double> mu_mid(grid.mu_cells);
    for (int i = 0; i < grid.mu_cells; ++i) mu_mid[i] = left + (i + 0.5) * h;
    int mu0_idx = 0;
    double best = std::abs(mu_mid[0] - spec.mu0);
    for (int i = 1; i < grid.mu_cells; ++i) {
        const double d = std::abs(mu_mid[i] - spec.mu0);
        if (d < best) {
            best = d;
            mu0_idx = i;
        }
    }
    if (best > 0.5 * h + 1e-9 * (1.0 + std::abs(spec.mu0))) {
        throw ValidationError("grid window does not contain mu0");
    }

    const double du = (grid.log_s2_hi - grid.log_s2_lo) / grid.s2_cells;
    std::vector<double> s2_mid(grid.s2_cells);
    for (int j = 0; j < grid.s2_cells; ++j) {
        s2_mid[j] = std::exp(grid.log_s2_lo + (j + 0.5) * du);
    }

    const std::size_t n_cells = static_cast<std::size_t>(grid.mu_cells) * grid.s2_cells;
    std::vector<double> prior_mass(n_cells);
    std::vector<double> log_lik(n_cells);
    double max_log_lik = -std::numeric_limits<double>::infinity();
    const double log_area = std::log(h) + std::log(du);
    for (int j = 0; j < grid.s2_cells; ++j) {
        const double s2c = s2_mid[j];
        const double log_ig = log_inv_gamma_pdf(s2c, spec.alpha0, spec.beta0) + std::log(s2c);
        for (int i = 0; i < grid.mu_cells; ++i) {
            const std::size_t c = static_cast<std::size_t>(i) * grid.s2_cells + j;
            prior_mass[c] =
                std::exp(log_norm_pdf(mu_mid[i], spec.mu0, spec.tau2 * s2c) + log_ig + log_area);
            log_lik[c] = log_lik_stat(spec, stat, mu_mid[i], s2c);
            if (log_lik[c] > max_log_lik) max_log_lik = log_lik[c];
        }
    }

    const double captured = stable_sum(prior_mass);
    if (captured < 0.999) {
        throw GridTooCoarse("grid captures prior mass " + format_sig12(captured) +
                            ", below 0.999");
    }

    std::vector<Label> theta_labels(n_cells);
    std::vector<Label> psi_of(n_cells);
    std::vector<double> prior(n_cells);
    std::vector<std::vector<double>> lik(n_cells);
    for (int i = 0; i < grid.mu_cells; ++i) {
        const Label mu_label = "mu" + std::to_string(i);
        for (int j = 0; j < grid.s2_cells; ++j) {
            const std::size_t c = static_cast<std::size_t>(i) * grid.s2_cells + j;
            theta_labels[c] = mu_label + "_s" + std::to_string(j);
            psi_of[c] = mu_label;
            prior[c] = prior_mass[c] / captured;
            const double f = std::exp(log_lik[c] - max_log_lik);  // scaled into [0,1]
            lik[c] = {f, 1.0 - f};
        }
    }

    GridModel out{DiscreteModel(std::move(theta_labels), std::move(prior), {"obs", "other"},
                                std::move(lik)),
                  Marginalization(std::move(psi_of)), "obs", "mu" + std::to_string(mu0_idx),
                  captured};
    return out;
}

}  // namespace relbel
