#include "relbel/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relbel/errors.hpp"
#include "relbel/numeric.hpp"

namespace relbel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<bool> mask_from_labels(const DiscreteModel& model, const std::vector<Label>& event) {
    std::vector<bool> mask(model.n_theta(), false);
    for (const Label& l : event) mask[model.theta_index(l)] = true;
    return mask;
}

struct EventMasses {
    double prior;
    double posterior;
    double prior_c;
    double posterior_c;
};

EventMasses event_masses(const DiscreteModel& model, const std::vector<bool>& mask,
                         std::size_t x_idx) {
    const Distribution post = posterior(model, x_idx);
    double pa = 0.0, pax = 0.0, pc = 0.0, pcx = 0.0;
    for (std::size_t i = 0; i < model.n_theta(); ++i) {
        if (mask[i]) {
            pa += model.prior_at(i);
            pax += post[i];
        } else {
            pc += model.prior_at(i);
            pcx += post[i];
        }
    }
    return {pa, pax, pc, pcx};
}

// Marginal prior and posterior masses per psi; posterior column sums are
// accumulated before the single division by m(x) so one-psi cases stay exact.
struct MarginalMasses {
    std::vector<double> prior;
    std::vector<double> posterior;
};

MarginalMasses marginal_masses(const DiscreteModel& model, const Marginalization& marg,
                               std::size_t x_idx) {
    check_compatible(model, marg);
    std::vector<double> prior(marg.n_psi(), 0.0);
    std::vector<double> joint(marg.n_psi(), 0.0);
    std::vector<double> buf;
    std::vector<double> pbuf;
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        buf.clear();
        pbuf.clear();
        for (std::size_t i : marg.preimage(k)) {
            pbuf.push_back(model.prior_at(i));
            buf.push_back(model.prior_at(i) * model.likelihood(i, x_idx));
        }
        prior[k] = stable_sum(pbuf);
        joint[k] = stable_sum(buf);
        if (!(prior[k] > 0.0)) {
            throw ZeroPriorMass("psi \"" + marg.psi_labels()[k] + "\" has zero prior mass");
        }
    }
    const double m = stable_sum(joint);
    if (!(m > 0.0)) {
        throw ZeroPredictive("observed point \"" + model.x_labels()[x_idx] +
                             "\" has zero prior-predictive probability");
    }
    std::vector<double> post(marg.n_psi());
    for (std::size_t k = 0; k < marg.n_psi(); ++k) post[k] = joint[k] / m;
    return {std::move(prior), std::move(post)};
}

}  // namespace

const char* to_string(EvidenceClass c) {
    switch (c) {
        case EvidenceClass::InFavor: return "in_favor";
        case EvidenceClass::Against: return "against";
        default: return "no_evidence";
    }
}

EvidenceValue rb_event(const DiscreteModel& model, const std::vector<bool>& mask,
                       std::size_t x_idx) {
    const EventMasses em = event_masses(model, mask, x_idx);
    if (!(em.prior > 0.0)) throw ZeroPriorMass("event has zero prior mass");
    return {em.posterior / em.prior, EvidenceKind::RelativeBelief};
}

EvidenceValue rb_event(const DiscreteModel& model, const std::vector<Label>& event,
                       const Label& x) {
    return rb_event(model, mask_from_labels(model, event), model.x_index(x));
}

EvidenceValue bf_event(const DiscreteModel& model, const std::vector<bool>& mask,
                       std::size_t x_idx) {
    const EventMasses em = event_masses(model, mask, x_idx);
    if (!(em.prior > 0.0) || !(em.prior_c > 0.0)) {
        throw DegeneratePriorMass("Bayes factor needs 0 < prior(event) < 1");
    }
    if (em.posterior_c <= 0.0) return {kInf, EvidenceKind::BayesFactor};
    const double posterior_odds = em.posterior / em.posterior_c;
    const double prior_odds = em.prior / em.prior_c;
    return {posterior_odds / prior_odds, EvidenceKind::BayesFactor};
}

EvidenceValue bf_event(const DiscreteModel& model, const std::vector<Label>& event,
                       const Label& x) {
    return bf_event(model, mask_from_labels(model, event), model.x_index(x));
}

EvidenceClass classify(double value, double eta) {
    if (value > 1.0 + eta) return EvidenceClass::InFavor;
    if (value < 1.0 - eta) return EvidenceClass::Against;
    return EvidenceClass::NoEvidence;
}

EvidenceClass classify(const EvidenceValue& v, double eta) { return classify(v.value, eta); }

std::vector<double> rb_marginal(const DiscreteModel& model, const Marginalization& marg,
                                std::size_t x_idx) {
    const MarginalMasses mm = marginal_masses(model, marg, x_idx);
    std::vector<double> rb(marg.n_psi());
    for (std::size_t k = 0; k < marg.n_psi(); ++k) rb[k] = mm.posterior[k] / mm.prior[k];
    return rb;
}

std::vector<double> rb_marginal(const DiscreteModel& model, const Marginalization& marg,
                                const Label& x) {
    return rb_marginal(model, marg, model.x_index(x));
}

Label rb_estimate(const DiscreteModel& model, const Marginalization& marg, const Label& x) {
    const std::vector<double> rb = rb_marginal(model, marg, x);
    std::size_t best = 0;
    for (std::size_t k = 1; k < rb.size(); ++k) {
        if (rb[k] > rb[best]) best = k;
    }
    return marg.psi_labels()[best];
}

PlausibleRegion plausible_region(const DiscreteModel& model, const Marginalization& marg,
                                 const Label& x) {
    const std::size_t j = model.x_index(x);
    const MarginalMasses mm = marginal_masses(model, marg, j);
    PlausibleRegion out;
    double content = 0.0;
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        if (mm.posterior[k] / mm.prior[k] > 1.0) {
            out.members.push_back(marg.psi_labels()[k]);
            content += mm.posterior[k];
        }
    }
    out.posterior_content = content;
    return out;
}

CredibleRegion credible_region(const DiscreteModel& model, const Marginalization& marg,
                               const Label& x, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ValidationError("gamma must be in [0,1], got " + format_sig12(gamma));
    }
    const std::size_t j = model.x_index(x);
    const MarginalMasses mm = marginal_masses(model, marg, j);

    std::vector<double> rb(marg.n_psi());
    double plausible = 0.0;
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        rb[k] = mm.posterior[k] / mm.prior[k];
        if (rb[k] > 1.0) plausible += mm.posterior[k];
    }
    if (gamma > plausible) {
        throw GammaTooLarge("gamma = " + format_sig12(gamma) +
                            " exceeds the plausible region's posterior content " +
                            format_sig12(plausible));
    }

    // Walk attained RB values downward; the cutoff is the largest value whose
    // upper set reaches posterior mass gamma. The posterior CDF of RB is a
    // step function, so this infimum is attained.
    std::vector<std::size_t> order(marg.n_psi());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rb[a] > rb[b]; });

    double cutoff = rb[order.front()];
    double content = 0.0;
    std::size_t pos = 0;
    while (pos < order.size()) {
        const double level = rb[order[pos]];
        double level_mass = 0.0;
        std::size_t next = pos;
        while (next < order.size() && rb[order[next]] == level) {
            level_mass += mm.posterior[order[next]];
            ++next;
        }
        content += level_mass;
        cutoff = level;
        if (content >= gamma) break;
        pos = next;
    }

    CredibleRegion out;
    out.gamma = gamma;
    out.cutoff = cutoff;
    out.posterior_content = 0.0;
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        if (rb[k] >= cutoff) {
            out.members.push_back(marg.psi_labels()[k]);
            out.posterior_content += mm.posterior[k];
        }
    }
    return out;
}

double strength(const DiscreteModel& model, const Marginalization& marg, const Label& x,
                const Label& psi0) {
    const std::size_t j = model.x_index(x);
    const std::size_t k0 = marg.psi_index(psi0);
    const MarginalMasses mm = marginal_masses(model, marg, j);
    const double rb0 = mm.posterior[k0] / mm.prior[k0];
    double total = 0.0;
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        if (mm.posterior[k] / mm.prior[k] <= rb0) total += mm.posterior[k];
    }
    return total;
}

double kl_posterior_prior(const DiscreteModel& model, const Marginalization& marg,
                          const Label& x) {
    const std::size_t j = model.x_index(x);
    const MarginalMasses mm = marginal_masses(model, marg, j);
    std::vector<double> terms;
    terms.reserve(marg.n_psi());
    for (std::size_t k = 0; k < marg.n_psi(); ++k) {
        if (mm.posterior[k] > 0.0) {
            terms.push_back(mm.posterior[k] * std::log(mm.posterior[k] / mm.prior[k]));
        }
    }
    return stable_sum(terms);
}

double mutual_information(const DiscreteModel& model, const Marginalization& marg) {
    const Distribution m = prior_predictive(model);
    std::vector<double> terms;
    for (std::size_t j = 0; j < model.n_x(); ++j) {
        if (m[j] > 0.0) terms.push_back(m[j] * kl_posterior_prior(model, marg, model.x_labels()[j]));
    }
    return stable_sum(terms);
}

std::string jeffreys_label(double bf) {
    if (!(bf >= 0.0)) throw ValidationError("jeffreys_label: Bayes factor must be nonnegative");
    const bool against = bf < 1.0;
    const double v = against ? 1.0 / bf : bf;
    const double r10 = std::sqrt(10.0);
    std::string bucket;
    if (v <= r10) bucket = "Barely worth mentioning";
    else if (v <= 10.0) bucket = "Substantial";
    else if (v <= 10.0 * r10) bucket = "Strong";
    else if (v <= 100.0) bucket = "Very Strong";
    else bucket = "Decisive";
    return against ? bucket + " (against)" : bucket;
}

ProsecutorResult prosecutor(std::uint64_t population, std::uint64_t trait_count) {
    if (trait_count < 1 || population < trait_count) {
        throw ValidationError("prosecutor: need 1 <= m <= N");
    }
    ProsecutorResult out;
    const double n = static_cast<double>(population);
    const double m = static_cast<double>(trait_count);
    out.rb = n / m;
    out.bf = trait_count == 1 ? kInf : (n - 1.0) / (m - 1.0);
    out.posterior_guilt = 1.0 / m;
    return out;
}

EvidenceReport build_report(const DiscreteModel& model, const Marginalization& marg,
                            const Label& x, const std::optional<Label>& psi0, double eta) {
    EvidenceReport rep;
    const std::vector<double> rb = rb_marginal(model, marg, x);
    for (std::size_t k = 0; k < marg.n_psi(); ++k) rep.rb[marg.psi_labels()[k]] = rb[k];
    rep.estimate = rb_estimate(model, marg, x);
    PlausibleRegion pl = plausible_region(model, marg, x);
    rep.plausible_region = std::move(pl.members);
    std::sort(rep.plausible_region.begin(), rep.plausible_region.end());
    rep.plausible_content = pl.posterior_content;
    rep.kl = kl_posterior_prior(model, marg, x);
    if (psi0) {
        rep.strength = strength(model, marg, x, *psi0);
        rep.classification = classify(rb[marg.psi_index(*psi0)], eta);
    } else {
        rep.classification = classify(rb[marg.psi_index(rep.estimate)], eta);
    }
    return rep;
}

}  // namespace relbel
