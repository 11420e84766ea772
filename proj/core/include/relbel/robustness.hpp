#pragma once

#include <variant>
#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel {

// Direction for the convex-combination path
// pi_eps = [(1-eps) pi + eps c_q q*] / (1 - eps + eps c_q), q* = q / c_q.
class LinearContamination {
public:
    LinearContamination(const DiscreteModel& model, std::vector<double> q_unnormalized);

    double c_q() const { return c_q_; }
    const Distribution& q_star() const { return q_star_; }

private:
    double c_q_;
    Distribution q_star_;
};

// Direction for the geometric path pi_eps = r^eps pi / E_pi(r^eps) with
// r = q / pi. Requires support(q) contained in support(pi); log r must be
// finite on the support for the derivative operations.
class GeometricContamination {
public:
    GeometricContamination(const DiscreteModel& model, Distribution q);

    const Distribution& q() const { return q_; }
    // r(theta_i); zero where q vanishes inside the support of pi.
    const std::vector<double>& ratio() const { return ratio_; }
    // E_pi(log r); throws DegenerateNormalizer when log r diverges on the support.
    double prior_mean_log_ratio(const DiscreteModel& model) const;

private:
    Distribution q_;
    std::vector<double> ratio_;
};

using Contamination = std::variant<LinearContamination, GeometricContamination>;

enum class ScanTarget { RelativeBelief, BayesFactor };

// Perturbed prior at contamination size eps. Documented domain is [0, 1];
// small negative values are accepted when every weight stays nonnegative,
// which the difference schemes rely on.
Distribution contaminated_prior(const DiscreteModel& model, const LinearContamination& spec,
                                double eps);
Distribution contaminated_prior(const DiscreteModel& model, const GeometricContamination& spec,
                                double eps);
Distribution contaminated_prior(const DiscreteModel& model, const Contamination& spec, double eps);

// d log RB_eps(theta|x) / d eps at eps = 0; does not depend on theta.
double rb_logderiv_linear(const DiscreteModel& model, const LinearContamination& spec,
                          const Label& x);
double rb_logderiv_geometric(const DiscreteModel& model, const GeometricContamination& spec,
                             const Label& x);

// d log BF_eps(theta0|x) / d eps at eps = 0, exactly as the closed forms are
// stated; the geometric form is flagged by the difference oracle (its leading
// term disagrees in sign) and is reported, not silently corrected.
double bf_logderiv_linear(const DiscreteModel& model, const LinearContamination& spec,
                          const Label& theta0, const Label& x);
double bf_logderiv_geometric(const DiscreteModel& model, const GeometricContamination& spec,
                             const Label& theta0, const Label& x);

// Prior-predictive expectation of the log-derivative over the sample space.
// Zero for the RB target in both families.
double expected_logderiv(const DiscreteModel& model, const Contamination& spec, ScanTarget target,
                         const Label& theta0 = {});

struct EpsScanRow {
    double eps = 0.0;
    double value = 0.0;      // RB_eps(theta0|x) or BF_eps(theta0|x)
    double log_value = 0.0;
};

// Evaluates the perturbed quantity on the contaminated model at each eps.
// Rows come back in grid order.
std::vector<EpsScanRow> eps_scan(const DiscreteModel& model, const Contamination& spec,
                                 ScanTarget target, const Label& theta0, const Label& x,
                                 const std::vector<double>& eps_grid);

// Central differences of the perturbed log quantity at eps = 0, steps 1e-3 and
// 1e-4 with one Richardson step; falls back to one-sided second-order
// differences when a negative eps would produce negative weights. Used for the
// gap column in robustness reports.
double fd_logderiv(const DiscreteModel& model, const Contamination& spec, ScanTarget target,
                   const Label& theta0, const Label& x);

}  // namespace relbel
