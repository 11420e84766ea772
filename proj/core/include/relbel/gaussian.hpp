#pragma once

#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel {

// Hyperparameters for the normal location-scale conjugate model:
//   mu | sigma^2 ~ N(mu0, tau2 * sigma^2),  1/sigma^2 ~ Gamma_rate(alpha0, beta0),
// with the point hypothesis mu = mu0 carrying mixture weight p. The Bayes
// factor never depends on p; it is carried so the API can prove that.
struct NormalConjugateSpec {
    double mu0 = 0.0;
    double tau2 = 1.0;
    double alpha0 = 1.0;
    double beta0 = 1.0;
    double p = 0.5;
    int n = 1;

    void validate() const;
};

// Minimal sufficient statistic: sample mean and centered sum of squares
// s2 = sum_i (x_i - xbar)^2 (not the sample variance).
struct SufficientStat {
    double xbar = 0.0;
    double s2 = 0.0;

    void validate() const;
};

// Mixture-prior Bayes factor for mu = mu0 in closed form.
double bf_normal(const NormalConjugateSpec& spec, const SufficientStat& stat);

// Relative belief ratio for mu = mu0 under the pure continuous prior:
// marginal posterior density of mu over marginal prior density, both at mu0.
double rb_normal(const NormalConjugateSpec& spec, const SufficientStat& stat);

// Limit of bf_normal as |xbar - mu0| grows with s2 fixed:
// (1 + n tau2)^(-n/2 - alpha0 + 1/2). Nonzero, hence information inconsistency.
double info_inconsistency_limit(const NormalConjugateSpec& spec);

struct DiffuseRow {
    double tau2 = 0.0;
    double bf = 0.0;
    double rb = 0.0;
};

// Both measures along a grid of prior scales; both diverge as tau2 grows.
std::vector<DiffuseRow> diffuse_scan(const NormalConjugateSpec& spec, const SufficientStat& stat,
                                     const std::vector<double>& tau2_grid);

// Cell layout for the finite-grid surrogate. mu cells are equispaced and
// aligned so mu0 is a cell midpoint; sigma2 cells are equispaced in log.
struct GridSpec {
    double mu_lo = 0.0;
    double mu_hi = 0.0;
    int mu_cells = 0;
    double log_s2_lo = 0.0;
    double log_s2_hi = 0.0;
    int s2_cells = 0;
};

// Default window: mu in mu(x) +/- 8 posterior standard deviations, sigma2
// covering the central 0.9999 mass of both prior and posterior, 400 x 400.
GridSpec default_grid(const NormalConjugateSpec& spec, const SufficientStat& stat,
                      int cells = 400);

// Wider window for convergence studies (truncation pushed far below
// discretization error).
GridSpec wide_grid(const NormalConjugateSpec& spec, const SufficientStat& stat, int cells);

struct GridModel {
    DiscreteModel model;
    Marginalization marg;      // psi = mu cell
    Label observed;            // x label carrying the data point
    Label mu0_cell;            // psi label of the cell whose midpoint is mu0
    double captured_prior_mass = 0.0;
};

// Discretizes the conjugate model onto the grid; rb_marginal at mu0_cell
// converges to rb_normal as the grid refines. Throws GridTooCoarse when the
// captured prior mass falls below 0.999.
GridModel grid_bridge(const NormalConjugateSpec& spec, const SufficientStat& stat,
                      const GridSpec& grid);

}  // namespace relbel
