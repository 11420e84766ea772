#include "relbel/robustness.hpp"

#include <cmath>
#include <utility>

#include "relbel/errors.hpp"
#include "relbel/evidence.hpp"
#include "relbel/numeric.hpp"

namespace relbel {

namespace {

// Predictive under an arbitrary weight vector on the theta grid.
double predictive_under(const DiscreteModel& model, const std::vector<double>& w,
                        std::size_t x_idx) {
    std::vector<double> terms;
    terms.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0.0) terms.push_back(w[i] * model.likelihood(i, x_idx));
    }
    return stable_sum(terms);
}

double checked_m(const DiscreteModel& model, const Label& x) {
    const std::size_t j = model.x_index(x);
    const double m = predictive_under(model, model.prior(), j);
    if (!(m > 0.0)) {
        throw ZeroPredictive("observed point \"" + x + "\" has zero prior-predictive probability");
    }
    return m;
}

}  // namespace

LinearContamination::LinearContamination(const DiscreteModel& model, std::vector<double> q)
    : c_q_(0.0), q_star_([&] {
          if (q.size() != model.n_theta()) {
              throw ValidationError("q has " + std::to_string(q.size()) + " entries, expected " +
                                    std::to_string(model.n_theta()));
          }
          for (std::size_t i = 0; i < q.size(); ++i) {
              if (!(q[i] >= 0.0) || !std::isfinite(q[i])) {
                  throw ValidationError("q[" + std::to_string(i) + "] = " + std::to_string(q[i]) +
                                        " is not nonnegative");
              }
          }
          return Distribution(normalized(q));
      }()) {
    c_q_ = stable_sum(q);
}

GeometricContamination::GeometricContamination(const DiscreteModel& model, Distribution q)
    : q_(std::move(q)) {
    if (q_.size() != model.n_theta()) {
        throw ValidationError("q has " + std::to_string(q_.size()) + " entries, expected " +
                              std::to_string(model.n_theta()));
    }
    ratio_.resize(q_.size(), 0.0);
    for (std::size_t i = 0; i < q_.size(); ++i) {
        const double pi = model.prior_at(i);
        if (pi == 0.0) {
            if (q_[i] != 0.0) {
                throw ValidationError("geometric direction puts mass on theta \"" +
                                      model.theta_labels()[i] + "\" outside the prior's support");
            }
            ratio_[i] = 0.0;
        } else {
            ratio_[i] = q_[i] / pi;
        }
    }
}

double GeometricContamination::prior_mean_log_ratio(const DiscreteModel& model) const {
    std::vector<double> terms;
    for (std::size_t i = 0; i < ratio_.size(); ++i) {
        const double pi = model.prior_at(i);
        if (pi == 0.0) continue;
        if (!(ratio_[i] > 0.0)) {
            throw DegenerateNormalizer("log r diverges at theta \"" + model.theta_labels()[i] +
                                       "\" (q vanishes inside the prior's support)");
        }
        terms.push_back(pi * std::log(ratio_[i]));
    }
    return stable_sum(terms);
}

Distribution contaminated_prior(const DiscreteModel& model, const LinearContamination& spec,
                                double eps) {
    if (!(eps > -1.0 && eps <= 1.0)) {
        throw InvalidEpsilon("linear contamination needs eps in [0,1], got " + format_sig12(eps));
    }
    const double denom = 1.0 - eps + eps * spec.c_q();
    if (!(denom > 0.0)) throw DegenerateNormalizer("linear contamination normalizer is not positive");
    std::vector<double> w(model.n_theta());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = ((1.0 - eps) * model.prior_at(i) + eps * spec.c_q() * spec.q_star()[i]) / denom;
        if (w[i] < 0.0) {
            throw InvalidEpsilon("eps = " + format_sig12(eps) +
                                 " drives a contaminated prior weight negative");
        }
    }
    return Distribution(normalized(std::move(w)));
}

Distribution contaminated_prior(const DiscreteModel& model, const GeometricContamination& spec,
                                double eps) {
    if (!(eps > -1.0 && eps <= 1.0)) {
        throw InvalidEpsilon("geometric contamination needs eps in [0,1], got " +
                             format_sig12(eps));
    }
    std::vector<double> w(model.n_theta(), 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double pi = model.prior_at(i);
        if (pi == 0.0) continue;
        if (spec.ratio()[i] == 0.0) {
            if (eps < 0.0) {
                throw DegenerateNormalizer("r^eps diverges for eps < 0 where q vanishes");
            }
            w[i] = eps == 0.0 ? pi : 0.0;
        } else {
            w[i] = std::pow(spec.ratio()[i], eps) * pi;
        }
    }
    const double total = stable_sum(w);
    if (!(total > 0.0)) throw DegenerateNormalizer("geometric contamination normalizer is zero");
    for (double& v : w) v /= total;
    return Distribution(std::move(w));
}

Distribution contaminated_prior(const DiscreteModel& model, const Contamination& spec, double eps) {
    return std::visit([&](const auto& s) { return contaminated_prior(model, s, eps); }, spec);
}

double rb_logderiv_linear(const DiscreteModel& model, const LinearContamination& spec,
                          const Label& x) {
    const std::size_t j = model.x_index(x);
    const double m = checked_m(model, x);
    const double m_q = predictive_under(model, spec.q_star().weights(), j);
    return spec.c_q() * (1.0 - m_q / m);
}

double rb_logderiv_geometric(const DiscreteModel& model, const GeometricContamination& spec,
                             const Label& x) {
    const double prior_mean = spec.prior_mean_log_ratio(model);
    const Distribution post = posterior(model, x);
    std::vector<double> terms;
    for (std::size_t i = 0; i < post.size(); ++i) {
        if (post[i] == 0.0) continue;
        if (!(spec.ratio()[i] > 0.0)) {
            throw DegenerateNormalizer("log r diverges at theta \"" + model.theta_labels()[i] +
                                       "\" (q vanishes inside the prior's support)");
        }
        terms.push_back(post[i] * std::log(spec.ratio()[i]));
    }
    return prior_mean - stable_sum(terms);
}

double bf_logderiv_linear(const DiscreteModel& model, const LinearContamination& spec,
                          const Label& theta0, const Label& x) {
    const std::size_t i0 = model.theta_index(theta0);
    const double pi0 = model.prior_at(i0);
    if (!(pi0 > 0.0 && pi0 < 1.0)) {
        throw DegeneratePriorMass("Bayes factor log-derivative needs 0 < prior(theta0) < 1");
    }
    std::vector<bool> mask(model.n_theta(), false);
    mask[i0] = true;
    const double bf = bf_event(model, mask, model.x_index(x)).value;
    const double rb_deriv = rb_logderiv_linear(model, spec, x);
    const double odds = pi0 / (1.0 - pi0);
    return rb_deriv * (1.0 + odds * bf) +
           spec.c_q() * ((pi0 - spec.q_star()[i0]) / (1.0 - pi0)) * (1.0 - bf);
}

double bf_logderiv_geometric(const DiscreteModel& model, const GeometricContamination& spec,
                             const Label& theta0, const Label& x) {
    const std::size_t i0 = model.theta_index(theta0);
    const double pi0 = model.prior_at(i0);
    if (!(pi0 > 0.0 && pi0 < 1.0)) {
        throw DegeneratePriorMass("Bayes factor log-derivative needs 0 < prior(theta0) < 1");
    }
    if (!(spec.ratio()[i0] > 0.0)) {
        throw DegenerateNormalizer("log r diverges at theta \"" + theta0 + "\"");
    }
    std::vector<bool> mask(model.n_theta(), false);
    mask[i0] = true;
    const double bf = bf_event(model, mask, model.x_index(x)).value;
    const double rb_deriv = rb_logderiv_geometric(model, spec, x);
    const double prior_mean = spec.prior_mean_log_ratio(model);
    const double odds = pi0 / (1.0 - pi0);
    return -rb_deriv * (1.0 + odds * bf) +
           (prior_mean - std::log(spec.ratio()[i0])) * odds * (1.0 - bf);
}

double expected_logderiv(const DiscreteModel& model, const Contamination& spec, ScanTarget target,
                         const Label& theta0) {
    const Distribution m = prior_predictive(model);
    const bool linear = std::holds_alternative<LinearContamination>(spec);
    std::vector<double> terms;
    for (std::size_t j = 0; j < model.n_x(); ++j) {
        if (!(m[j] > 0.0)) continue;
        const Label& x = model.x_labels()[j];
        double d = 0.0;
        if (target == ScanTarget::RelativeBelief) {
            d = linear ? rb_logderiv_linear(model, std::get<LinearContamination>(spec), x)
                       : rb_logderiv_geometric(model, std::get<GeometricContamination>(spec), x);
        } else {
            d = linear
                    ? bf_logderiv_linear(model, std::get<LinearContamination>(spec), theta0, x)
                    : bf_logderiv_geometric(model, std::get<GeometricContamination>(spec), theta0,
                                            x);
        }
        terms.push_back(m[j] * d);
    }
    return stable_sum(terms);
}

std::vector<EpsScanRow> eps_scan(const DiscreteModel& model, const Contamination& spec,
                                 ScanTarget target, const Label& theta0, const Label& x,
                                 const std::vector<double>& eps_grid) {
    const std::size_t i0 = model.theta_index(theta0);
    const std::size_t j = model.x_index(x);
    std::vector<bool> mask(model.n_theta(), false);
    mask[i0] = true;

    std::vector<EpsScanRow> rows;
    rows.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const DiscreteModel perturbed =
            model.with_prior(contaminated_prior(model, spec, eps).weights());
        double value = 0.0;
        if (target == ScanTarget::RelativeBelief) {
            value = rb_event(perturbed, mask, j).value;
        } else {
            value = bf_event(perturbed, mask, j).value;
        }
        rows.push_back({eps, value, std::log(value)});
    }
    return rows;
}

double fd_logderiv(const DiscreteModel& model, const Contamination& spec, ScanTarget target,
                   const Label& theta0, const Label& x) {
    const std::size_t i0 = model.theta_index(theta0);
    const std::size_t j = model.x_index(x);
    std::vector<bool> mask(model.n_theta(), false);
    mask[i0] = true;

    auto log_value = [&](double eps) {
        const DiscreteModel perturbed =
            model.with_prior(contaminated_prior(model, spec, eps).weights());
        const double v = target == ScanTarget::RelativeBelief ? rb_event(perturbed, mask, j).value
                                                              : bf_event(perturbed, mask, j).value;
        return std::log(v);
    };

    bool central_ok = true;
    try {
        (void)log_value(-1e-3);
    } catch (const Error&) {
        central_ok = false;
    }

    auto diff = [&](double h) {
        if (central_ok) return (log_value(h) - log_value(-h)) / (2.0 * h);
        return (-3.0 * log_value(0.0) + 4.0 * log_value(h) - log_value(2.0 * h)) / (2.0 * h);
    };
    const double d1 = diff(1e-3);
    const double d2 = diff(1e-4);
    const double r2 = 100.0;  // (h1/h2)^2, cancels the O(h^2) term
    return (r2 * d2 - d1) / (r2 - 1.0);
}

}  // namespace relbel
