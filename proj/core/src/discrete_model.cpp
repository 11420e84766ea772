#include "relbel/discrete_model.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "relbel/errors.hpp"
#include "relbel/numeric.hpp"

namespace relbel {

namespace {

void check_weights(const std::vector<double>& w, const char* what) {
    if (w.empty()) throw ValidationError(std::string(what) + " is empty");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] >= 0.0) || !std::isfinite(w[i])) {
            throw ValidationError(std::string(what) + "[" + std::to_string(i) +
                                  "] = " + std::to_string(w[i]) + " is not a probability");
        }
    }
    const double total = stable_sum(w);
    if (std::abs(total - 1.0) > kProbTol) {
        throw ValidationError(std::string(what) + " sums to " + format_sig12(total) +
                              ", expected 1 within 1e-12");
    }
}

void check_distinct(const std::vector<Label>& labels, const char* what) {
    std::unordered_map<Label, std::size_t> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = seen.emplace(labels[i], i);
        if (!fresh) {
            throw ValidationError(std::string(what) + " labels not distinct: \"" + labels[i] +
                                  "\" at indices " + std::to_string(it->second) + " and " +
                                  std::to_string(i));
        }
    }
}

std::unordered_map<Label, std::size_t> build_index(const std::vector<Label>& labels) {
    std::unordered_map<Label, std::size_t> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    return index;
}

}  // namespace

Distribution::Distribution(std::vector<double> weights) : weights_(std::move(weights)) {
    check_weights(weights_, "distribution");
}

std::vector<double> normalized(std::vector<double> weights) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
            throw ValidationError("normalize: weight[" + std::to_string(i) + "] = " +
                                  std::to_string(weights[i]) + " is not nonnegative");
        }
    }
    const double total = stable_sum(weights);
    if (!(total > 0.0)) throw ValidationError("normalize: total weight is not positive");
    for (double& w : weights) w /= total;
    return weights;
}

DiscreteModel::DiscreteModel(std::vector<Label> theta_labels, std::vector<double> prior,
                             std::vector<Label> x_labels,
                             std::vector<std::vector<double>> likelihood)
    : theta_labels_(std::move(theta_labels)),
      prior_(std::move(prior)),
      x_labels_(std::move(x_labels)),
      likelihood_(std::move(likelihood)) {
    check_distinct(theta_labels_, "theta");
    check_distinct(x_labels_, "x");
    if (prior_.size() != theta_labels_.size()) {
        throw ValidationError("prior has " + std::to_string(prior_.size()) + " entries, expected " +
                              std::to_string(theta_labels_.size()));
    }
    check_weights(prior_, "prior");
    if (likelihood_.size() != theta_labels_.size()) {
        throw ValidationError("likelihood has " + std::to_string(likelihood_.size()) +
                              " rows, expected " + std::to_string(theta_labels_.size()));
    }
    for (std::size_t i = 0; i < likelihood_.size(); ++i) {
        const auto& row = likelihood_[i];
        if (row.size() != x_labels_.size()) {
            throw ValidationError("likelihood row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(x_labels_.size()));
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!(row[j] >= 0.0) || !std::isfinite(row[j])) {
                throw ValidationError("likelihood[" + std::to_string(i) + "][" +
                                      std::to_string(j) + "] = " + std::to_string(row[j]) +
                                      " is negative or non-finite");
            }
        }
        const double total = stable_sum(row);
        if (std::abs(total - 1.0) > kProbTol) {
            throw ValidationError("likelihood row " + std::to_string(i) + " sums to " +
                                  format_sig12(total) + ", expected 1 within 1e-12");
        }
    }
    theta_index_ = build_index(theta_labels_);
    x_index_ = build_index(x_labels_);
}

std::size_t DiscreteModel::theta_index(const Label& label) const {
    auto it = theta_index_.find(label);
    if (it == theta_index_.end()) throw ValidationError("unknown theta label \"" + label + "\"");
    return it->second;
}

std::size_t DiscreteModel::x_index(const Label& label) const {
    auto it = x_index_.find(label);
    if (it == x_index_.end()) throw ValidationError("unknown x label \"" + label + "\"");
    return it->second;
}

DiscreteModel DiscreteModel::with_prior(std::vector<double> prior) const {
    return DiscreteModel(theta_labels_, std::move(prior), x_labels_, likelihood_);
}

Marginalization::Marginalization(std::vector<Label> psi_of) {
    if (psi_of.empty()) throw ValidationError("marginalization map is empty");
    psi_of_index_.reserve(psi_of.size());
    for (std::size_t i = 0; i < psi_of.size(); ++i) {
        auto it = psi_index_.find(psi_of[i]);
        if (it == psi_index_.end()) {
            it = psi_index_.emplace(psi_of[i], psi_labels_.size()).first;
            psi_labels_.push_back(psi_of[i]);
            preimages_.emplace_back();
        }
        psi_of_index_.push_back(it->second);
        preimages_[it->second].push_back(i);
    }
}

Marginalization Marginalization::identity(const DiscreteModel& model) {
    return Marginalization(model.theta_labels());
}

std::size_t Marginalization::psi_index(const Label& label) const {
    auto it = psi_index_.find(label);
    if (it == psi_index_.end()) throw ValidationError("unknown psi label \"" + label + "\"");
    return it->second;
}

void check_compatible(const DiscreteModel& model, const Marginalization& marg) {
    if (marg.n_theta() != model.n_theta()) {
        throw ValidationError("marginalization covers " + std::to_string(marg.n_theta()) +
                              " theta points, model has " + std::to_string(model.n_theta()));
    }
}

Distribution posterior(const DiscreteModel& model, std::size_t x_idx) {
    std::vector<double> w(model.n_theta());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = model.prior_at(i) * model.likelihood(i, x_idx);
    const double m = stable_sum(w);
    if (!(m > 0.0)) {
        throw ZeroPredictive("observed point \"" + model.x_labels()[x_idx] +
                             "\" has zero prior-predictive probability");
    }
    for (double& v : w) v /= m;
    return Distribution(std::move(w));
}

Distribution posterior(const DiscreteModel& model, const Label& x) {
    return posterior(model, model.x_index(x));
}

Distribution prior_predictive(const DiscreteModel& model) {
    std::vector<double> m(model.n_x());
    std::vector<double> col(model.n_theta());
    for (std::size_t j = 0; j < model.n_x(); ++j) {
        for (std::size_t i = 0; i < model.n_theta(); ++i) {
            col[i] = model.prior_at(i) * model.likelihood(i, j);
        }
        m[j] = stable_sum(col);
    }
    return Distribution(std::move(m));
}

Distribution marginal_prior(const DiscreteModel& model, const Marginalization& marg) {
    check_compatible(model, marg);
    std::vector<double> w(marg.n_psi());
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        double total = 0.0;
        for (std::size_t i : marg.preimage(k)) total += model.prior_at(i);
        w[k] = total;
    }
    return Distribution(std::move(w));
}

Distribution conditional_prior(const DiscreteModel& model, const Marginalization& marg,
                               const Label& psi0) {
    check_compatible(model, marg);
    const std::size_t k = marg.psi_index(psi0);
    double mass = 0.0;
    for (std::size_t i : marg.preimage(k)) mass += model.prior_at(i);
    if (!(mass > 0.0)) throw ZeroPriorMass("psi \"" + psi0 + "\" has zero prior mass");
    std::vector<double> w(model.n_theta(), 0.0);
    for (std::size_t i : marg.preimage(k)) w[i] = model.prior_at(i) / mass;
    return Distribution(std::move(w));
}

double conditional_prior_predictive(const DiscreteModel& model, const Marginalization& marg,
                                    const Label& psi0, const Label& x) {
    const Distribution cond = conditional_prior(model, marg, psi0);
    const std::size_t j = model.x_index(x);
    double total = 0.0;
    for (std::size_t i = 0; i < model.n_theta(); ++i) {
        if (cond[i] > 0.0) total += cond[i] * model.likelihood(i, j);
    }
    return total;
}

}  // namespace relbel
