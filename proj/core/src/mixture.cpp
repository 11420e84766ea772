#include "relbel/mixture.hpp"

#include <cmath>
#include <utility>

#include "relbel/errors.hpp"
#include "relbel/numeric.hpp"

namespace relbel {

namespace {

Distribution resolve_spike(const DiscreteModel& model, const Marginalization& marg,
                           const Label& psi0, std::optional<Distribution> spike) {
    if (!spike) return conditional_prior(model, marg, psi0);
    if (spike->size() != model.n_theta()) {
        throw ValidationError("spike has " + std::to_string(spike->size()) +
                              " entries, expected " + std::to_string(model.n_theta()));
    }
    const std::size_t k0 = marg.psi_index(psi0);
    for (std::size_t i = 0; i < model.n_theta(); ++i) {
        if ((*spike)[i] > 0.0 && marg.psi_of(i) != k0) {
            throw ValidationError("spike puts mass on theta \"" + model.theta_labels()[i] +
                                  "\" outside the preimage of psi \"" + psi0 + "\"");
        }
    }
    return std::move(*spike);
}

bool matches_conditional(const DiscreteModel& model, const Marginalization& marg,
                         const Label& psi0, const Distribution& spike) {
    const Distribution cond = conditional_prior(model, marg, psi0);
    for (std::size_t i = 0; i < spike.size(); ++i) {
        if (std::abs(spike[i] - cond[i]) > kProbTol) return false;
    }
    return true;
}

}  // namespace

MixturePrior::MixturePrior(const DiscreteModel& model, const Marginalization& marg, Label psi0,
                           double p, std::optional<Distribution> spike)
    : psi0_(std::move(psi0)),
      p_(p),
      spike_(resolve_spike(model, marg, psi0_, std::move(spike))),
      spike_matches_conditional_(matches_conditional(model, marg, psi0_, spike_)) {
    check_compatible(model, marg);
    if (!(p > 0.0 && p < 1.0)) {
        throw ValidationError("mixture weight p must be in (0,1), got " + format_sig12(p));
    }
}

double spike_predictive(const DiscreteModel& model, const MixturePrior& mix, const Label& x) {
    const std::size_t j = model.x_index(x);
    std::vector<double> terms;
    for (std::size_t i = 0; i < model.n_theta(); ++i) {
        if (mix.spike()[i] > 0.0) terms.push_back(mix.spike()[i] * model.likelihood(i, j));
    }
    return stable_sum(terms);
}

double mixture_predictive(const DiscreteModel& model, const MixturePrior& mix, const Label& x) {
    const double m_spike = spike_predictive(model, mix, x);
    const double m = prior_predictive(model)[model.x_index(x)];
    return mix.p() * m_spike + (1.0 - mix.p()) * m;
}

EvidenceValue bf_mixture(const DiscreteModel& model, const MixturePrior& mix, const Label& x) {
    const double m = prior_predictive(model)[model.x_index(x)];
    if (!(m > 0.0)) {
        throw ZeroPredictive("observed point \"" + x + "\" has zero prior-predictive probability");
    }
    return {spike_predictive(model, mix, x) / m, EvidenceKind::BayesFactor};
}

EvidenceValue rb_mixture(const DiscreteModel& model, const MixturePrior& mix, const Label& x) {
    const double m_spike = spike_predictive(model, mix, x);
    const double m_p = mixture_predictive(model, mix, x);
    if (!(m_p > 0.0)) {
        throw ZeroPredictive("observed point \"" + x +
                             "\" has zero predictive probability under the mixture prior");
    }
    return {m_spike / m_p, EvidenceKind::RelativeBelief};
}

DiscreteModel flatten(const DiscreteModel& model, const MixturePrior& mix) {
    std::vector<double> prior(model.n_theta());
    for (std::size_t i = 0; i < model.n_theta(); ++i) {
        prior[i] = mix.p() * mix.spike()[i] + (1.0 - mix.p()) * model.prior_at(i);
    }
    return model.with_prior(std::move(prior));
}

}  // namespace relbel
