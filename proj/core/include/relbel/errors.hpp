#pragma once

#include <stdexcept>
#include <string>

namespace relbel {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected inputs: malformed files, broken type invariants, bad flag values.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Well-formed inputs on which the requested quantity does not exist.
// The CLI maps these to exit code 3.
struct NumericError : Error {
    using Error::Error;
};

// Observed point has zero prior-predictive probability.
struct ZeroPredictive : NumericError {
    using NumericError::NumericError;
};

// Conditioning event (or marginal value) has zero prior mass.
struct ZeroPriorMass : NumericError {
    using NumericError::NumericError;
};

// Bayes factor requested for an event with prior mass 0 or 1.
struct DegeneratePriorMass : NumericError {
    using NumericError::NumericError;
};

// Credible level exceeds the posterior content of the plausible region.
struct GammaTooLarge : NumericError {
    using NumericError::NumericError;
};

// Contamination parameter outside the supported range.
struct InvalidEpsilon : ValidationError {
    using ValidationError::ValidationError;
};

// Perturbed prior cannot be normalized (zero or invalid total mass).
struct DegenerateNormalizer : NumericError {
    using NumericError::NumericError;
};

// Conjugate closed forms undefined (all scale terms vanish).
struct DegenerateData : NumericError {
    using NumericError::NumericError;
};

// Grid bridge captured too little prior mass to be trusted.
struct GridTooCoarse : NumericError {
    using NumericError::NumericError;
};

}  // namespace relbel
