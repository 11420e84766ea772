#pragma once

#include <optional>

#include "relbel/discrete_model.hpp"
#include "relbel/evidence.hpp"

namespace relbel {

// Spike-and-slab prior p * Pi_psi0 + (1-p) * Pi placing mass p on the
// hypothesis psi = psi0. The spike defaults to the conditional prior
// Pi(.|psi0); supplying anything else is allowed but flagged as a
// contradiction in prior beliefs.
class MixturePrior {
public:
    MixturePrior(const DiscreteModel& model, const Marginalization& marg, Label psi0, double p,
                 std::optional<Distribution> spike = std::nullopt);

    const Label& psi0() const { return psi0_; }
    double p() const { return p_; }
    const Distribution& spike() const { return spike_; }
    bool spike_matches_conditional() const { return spike_matches_conditional_; }

private:
    Label psi0_;
    double p_;
    Distribution spike_;
    bool spike_matches_conditional_;
};

// m_psi0(x): prior predictive under the spike component alone. Does not
// depend on p.
double spike_predictive(const DiscreteModel& model, const MixturePrior& mix, const Label& x);

// m_psi0_p(x) = p * m_psi0(x) + (1-p) * m(x).
double mixture_predictive(const DiscreteModel& model, const MixturePrior& mix, const Label& x);

// BF under the mixture prior: m_psi0(x) / m(x). Independent of p.
EvidenceValue bf_mixture(const DiscreteModel& model, const MixturePrior& mix, const Label& x);

// RB under the mixture prior: m_psi0(x) / m_psi0_p(x). Depends on p.
EvidenceValue rb_mixture(const DiscreteModel& model, const MixturePrior& mix, const Label& x);

// The mixture as an ordinary model on the same theta grid, with prior
// p * spike + (1-p) * prior; every evidence operation applies unchanged.
DiscreteModel flatten(const DiscreteModel& model, const MixturePrior& mix);

}  // namespace relbel
