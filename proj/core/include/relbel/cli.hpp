#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace relbel {

// Resolved command line. Paths are taken as given; label and flag validity is
// checked by run().
struct RunConfig {
    std::string subcommand;  // analyze | robustness | gaussian | prosecutor

    // analyze / robustness
    std::string model_path;
    std::string observed;
    std::optional<std::string> hypothesis_psi;
    std::optional<double> gamma;
    double eta = 0.0;
    std::optional<double> mixture_p;
    std::optional<std::string> mixture_psi0;
    std::optional<std::string> mixture_spike_path;

    // robustness
    std::string family;  // "lin" | "geo"
    std::string target;  // "rb" | "bf"
    std::string q_path;
    std::string theta0;
    std::vector<double> eps_grid;

    // gaussian
    double mu0 = 0.0;
    double tau2 = 1.0;
    double alpha0 = 1.0;
    double beta0 = 1.0;
    double p = 0.5;
    int n = 1;
    double xbar = 0.0;
    double s2 = 0.0;
    bool s2_is_variance = false;
    std::vector<double> tau2_grid;

    // prosecutor
    std::uint64_t population = 0;
    std::uint64_t trait_count = 0;

    // common
    std::optional<std::string> out_path;  // report JSON; stdout when absent
    std::optional<std::string> csv_path;  // scan CSV; stdout when absent
    std::uint64_t seed = 0;               // echoed into reports; analyses are deterministic
};

// Parses "a:step:b" into an inclusive grid.
std::vector<double> parse_grid(const std::string& text);

// Executes one configured run. Returns the process exit code:
// 0 success, 2 validation error, 3 numerical error. Diagnostics are single
// lines on err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command-line entry point: parse + run.
int cli_main(int argc, const char* const* argv);

}  // namespace relbel
