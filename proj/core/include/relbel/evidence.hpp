#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel {

enum class EvidenceKind { RelativeBelief, BayesFactor };

// Principle-of-evidence verdict relative to the cut-off 1.
enum class EvidenceClass { InFavor, Against, NoEvidence };

const char* to_string(EvidenceClass c);

struct EvidenceValue {
    double value = 0.0;  // >= 0; +inf allowed for Bayes factors
    EvidenceKind kind = EvidenceKind::RelativeBelief;
};

// RB(A|x) = Pi(A|x) / Pi(A). Requires Pi(A) > 0.
EvidenceValue rb_event(const DiscreteModel& model, const std::vector<Label>& event, const Label& x);
EvidenceValue rb_event(const DiscreteModel& model, const std::vector<bool>& event_mask,
                       std::size_t x_idx);

// BF(A|x) = posterior odds over prior odds. Requires 0 < Pi(A) < 1; returns
// +inf when the complement has zero posterior mass.
EvidenceValue bf_event(const DiscreteModel& model, const std::vector<Label>& event, const Label& x);
EvidenceValue bf_event(const DiscreteModel& model, const std::vector<bool>& event_mask,
                       std::size_t x_idx);

// Exact comparison with 1 by default; eta widens the no-evidence band.
EvidenceClass classify(const EvidenceValue& v, double eta = 0.0);
EvidenceClass classify(double value, double eta = 0.0);

// RB_Psi(psi|x) for every psi, aligned with marg.psi_labels(). Requires every
// psi to carry prior mass.
std::vector<double> rb_marginal(const DiscreteModel& model, const Marginalization& marg,
                                const Label& x);
std::vector<double> rb_marginal(const DiscreteModel& model, const Marginalization& marg,
                                std::size_t x_idx);

// Relative belief estimate: argmax of RB_Psi, ties broken by canonical order.
Label rb_estimate(const DiscreteModel& model, const Marginalization& marg, const Label& x);

struct PlausibleRegion {
    std::vector<Label> members;  // canonical order
    double posterior_content = 0.0;
};

// Values with evidence in favor: { psi : RB_Psi(psi|x) > 1 }.
PlausibleRegion plausible_region(const DiscreteModel& model, const Marginalization& marg,
                                 const Label& x);

struct CredibleRegion {
    double gamma = 0.0;
    double cutoff = 0.0;  // smallest RB value admitted
    std::vector<Label> members;
    double posterior_content = 0.0;
};

// Highest-RB set accumulating posterior mass >= gamma. Admissible only when
// gamma does not exceed the plausible region's posterior content.
CredibleRegion credible_region(const DiscreteModel& model, const Marginalization& marg,
                               const Label& x, double gamma);

// Posterior probability that the evidence at the true value is no better than
// at psi0 (ties included).
double strength(const DiscreteModel& model, const Marginalization& marg, const Label& x,
                const Label& psi0);

// KL(posterior_Psi || prior_Psi) = E_post log RB_Psi, with 0 log 0 := 0.
double kl_posterior_prior(const DiscreteModel& model, const Marginalization& marg, const Label& x);

// E over the joint (psi, x) of log RB_Psi(psi|x).
double mutual_information(const DiscreteModel& model, const Marginalization& marg);

// Jeffreys' scale bucket for a Bayes factor; values below 1 are bucketed by
// their reciprocal with an "against" qualifier.
std::string jeffreys_label(double bf);

struct ProsecutorResult {
    double rb = 0.0;              // N / m
    double bf = 0.0;              // (N-1)/(m-1); +inf when m == 1
    double posterior_guilt = 0.0; // 1 / m
};

// Uniform population of size N, trait shared by m members, selected individual
// has the trait.
ProsecutorResult prosecutor(std::uint64_t population, std::uint64_t trait_count);

// Analysis payload consumed by the CLI and serialized by report.cpp.
struct EvidenceReport {
    std::map<Label, double> rb;
    Label estimate;
    std::vector<Label> plausible_region;  // sorted lexicographically
    double plausible_content = 0.0;
    std::optional<double> strength;       // present when a hypothesis was supplied
    double kl = 0.0;
    EvidenceClass classification = EvidenceClass::NoEvidence;
    std::optional<std::string> jeffreys;  // only for Bayes-factor outputs
    // Mixture extensions (present when a mixture prior was supplied).
    std::optional<double> bf_mixture;
    std::optional<double> rb_mixture;
    std::optional<bool> spike_matches_conditional;
};

// Builds the full report for one observed point. classification refers to the
// hypothesis when one is supplied, otherwise to the estimate.
EvidenceReport build_report(const DiscreteModel& model, const Marginalization& marg,
                            const Label& x, const std::optional<Label>& psi0, double eta = 0.0);

}  // namespace relbel
