#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace relbel {

// Neumaier-compensated sum. Cell grids run to ~1e5 terms, where a naive
// accumulator would eat into the 1e-12 identity tolerances.
double stable_sum(std::span<const double> xs);

// Dot product with the same compensation.
double stable_dot(std::span<const double> a, std::span<const double> b);

// Round to 12 significant digits through a decimal round trip, so values
// written to reports re-read bit-identically.
double round_sig12(double x);

// Fixed 12-significant-digit text form used in every report and CSV.
std::string format_sig12(double x);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Quantile of the inverse-gamma distribution with shape `a` and scale `b`
// (i.e. 1/X ~ Gamma(a, rate b)). Solved by bisection on log scale.
double inv_gamma_quantile(double a, double b, double prob);

}  // namespace relbel
