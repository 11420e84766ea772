#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relbel/discrete_model.hpp"

namespace relbel {

struct LoadedModel {
    DiscreteModel model;
    Marginalization marg;  // identity when the file omits "psi"
};

// Model file schema:
//   {"theta": [...], "prior": [...], "x": [...], "likelihood": [[...], ...],
//    "psi": [...]}          (psi optional, parallel to theta)
// Validation reports the first violated invariant with indices.
LoadedModel load_model_file(const std::string& path);
LoadedModel parse_model_json(const std::string& text, const std::string& origin);

// Direction file for robustness: {"q": {"<theta-label>": weight, ...}}.
// Every theta label of the model must appear. Returned in theta order.
std::vector<double> load_q_file(const std::string& path, const DiscreteModel& model);

// Spike file for mixtures: {"spike": {"<theta-label>": weight, ...}}.
// Missing labels default to zero weight.
Distribution load_spike_file(const std::string& path, const DiscreteModel& model);

// Whole-file read with a ValidationError on failure.
std::string read_text_file(const std::string& path);

}  // namespace relbel
