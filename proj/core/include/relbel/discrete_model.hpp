#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace relbel {

using Label = std::string;

// Tolerance used by every construction and identity check on probabilities.
inline constexpr double kProbTol = 1e-12;

// Validated probability vector over a stated index set.
class Distribution {
public:
    explicit Distribution(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

// Rescale nonnegative weights to sum to one. Construction never renormalizes
// silently; callers opt in with this helper.
std::vector<double> normalized(std::vector<double> weights);

// Finite Bayesian model: parameter grid with prior weights, finite sample
// space, and a likelihood matrix whose rows are pmfs over the sample space.
// Immutable after construction.
class DiscreteModel {
public:
    DiscreteModel(std::vector<Label> theta_labels, std::vector<double> prior,
                  std::vector<Label> x_labels, std::vector<std::vector<double>> likelihood);

    std::size_t n_theta() const { return theta_labels_.size(); }
    std::size_t n_x() const { return x_labels_.size(); }
    const std::vector<Label>& theta_labels() const { return theta_labels_; }
    const std::vector<Label>& x_labels() const { return x_labels_; }
    const std::vector<double>& prior() const { return prior_; }
    double prior_at(std::size_t i) const { return prior_[i]; }
    double likelihood(std::size_t i, std::size_t j) const { return likelihood_[i][j]; }
    const std::vector<double>& likelihood_row(std::size_t i) const { return likelihood_[i]; }

    std::size_t theta_index(const Label& label) const;
    std::size_t x_index(const Label& label) const;

    // Same grid and likelihood under a different prior (mixture flattening,
    // contaminated priors). The new prior is validated.
    DiscreteModel with_prior(std::vector<double> prior) const;

private:
    std::vector<Label> theta_labels_;
    std::vector<double> prior_;
    std::vector<Label> x_labels_;
    std::vector<std::vector<double>> likelihood_;
    std::unordered_map<Label, std::size_t> theta_index_;
    std::unordered_map<Label, std::size_t> x_index_;
};

// Surjective map theta-index -> psi-label. Distinct psi labels are kept in
// canonical order (first appearance along the theta grid); ties and report
// orderings refer to that order.
class Marginalization {
public:
    explicit Marginalization(std::vector<Label> psi_of);
    static Marginalization identity(const DiscreteModel& model);

    std::size_t n_theta() const { return psi_of_index_.size(); }
    std::size_t n_psi() const { return psi_labels_.size(); }
    const std::vector<Label>& psi_labels() const { return psi_labels_; }
    std::size_t psi_index(const Label& label) const;
    std::size_t psi_of(std::size_t theta_idx) const { return psi_of_index_[theta_idx]; }
    const std::vector<std::size_t>& preimage(std::size_t psi_idx) const { return preimages_[psi_idx]; }

private:
    std::vector<Label> psi_labels_;
    std::vector<std::size_t> psi_of_index_;
    std::vector<std::vector<std::size_t>> preimages_;
    std::unordered_map<Label, std::size_t> psi_index_;
};

// Throws ValidationError when the marginalization does not cover the model's
// theta grid.
void check_compatible(const DiscreteModel& model, const Marginalization& marg);

// Posterior over theta given one observed point. Throws ZeroPredictive when
// the point is impossible under every theta with prior mass.
Distribution posterior(const DiscreteModel& model, std::size_t x_idx);
Distribution posterior(const DiscreteModel& model, const Label& x);

// Prior predictive over the sample space: m(x_j) = sum_i prior_i f_i(x_j).
Distribution prior_predictive(const DiscreteModel& model);

// Induced prior over psi.
Distribution marginal_prior(const DiscreteModel& model, const Marginalization& marg);

// Conditional prior on theta given psi = psi0; supported on the preimage.
Distribution conditional_prior(const DiscreteModel& model, const Marginalization& marg,
                               const Label& psi0);

// Conditional prior predictive m(x | psi0).
double conditional_prior_predictive(const DiscreteModel& model, const Marginalization& marg,
                                    const Label& psi0, const Label& x);

}  // namespace relbel
