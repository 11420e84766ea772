#include "relbel/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "relbel/errors.hpp"
#include "relbel/evidence.hpp"
#include "relbel/gaussian.hpp"
#include "relbel/mixture.hpp"
#include "relbel/model_io.hpp"
#include "relbel/numeric.hpp"
#include "relbel/report.hpp"
#include "relbel/robustness.hpp"
#include "relbel/version.hpp"

namespace relbel {

namespace {

using nlohmann::json;

struct HelpRequested {
    std::string text;
};

std::vector<double> number_grid(double a, double step, double b) {
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    if (b < a) throw ValidationError("grid end must not precede its start");
    std::vector<double> out;
    for (int k = 0;; ++k) {
        const double v = a + k * step;
        if (v > b + 1e-9 * step) break;
        out.push_back(v);
    }
    return out;
}

void write_output(const std::optional<std::string>& path, const std::string& text,
                  std::ostream& fallback) {
    if (!path) {
        fallback << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw ValidationError("cannot write to \"" + *path + "\"");
    out << text;
}

json config_echo(const RunConfig& c) {
    json j;
    j["subcommand"] = c.subcommand;
    j["seed"] = c.seed;
    if (c.subcommand == "analyze" || c.subcommand == "robustness") {
        j["model"] = c.model_path;
        j["observed"] = c.observed;
    }
    if (c.subcommand == "analyze") {
        if (c.hypothesis_psi) j["hypothesis"] = *c.hypothesis_psi;
        if (c.gamma) j["gamma"] = report_number(*c.gamma);
        if (c.eta != 0.0) j["eta"] = report_number(c.eta);
        if (c.mixture_p) {
            j["mixture"]["p"] = report_number(*c.mixture_p);
            j["mixture"]["psi0"] = *c.mixture_psi0;
            if (c.mixture_spike_path) j["mixture"]["spike"] = *c.mixture_spike_path;
        }
    } else if (c.subcommand == "robustness") {
        j["family"] = c.family;
        j["target"] = c.target;
        j["q"] = c.q_path;
        j["theta0"] = c.theta0;
        json grid = json::array();
        for (double e : c.eps_grid) grid.push_back(report_number(e));
        j["eps"] = std::move(grid);
    } else if (c.subcommand == "gaussian") {
        j["mu0"] = report_number(c.mu0);
        j["tau2"] = report_number(c.tau2);
        j["alpha0"] = report_number(c.alpha0);
        j["beta0"] = report_number(c.beta0);
        j["p"] = report_number(c.p);
        j["n"] = c.n;
        j["xbar"] = report_number(c.xbar);
        j["s2"] = report_number(c.s2);
        j["s2_interpretation"] = c.s2_is_variance ? "variance" : "sumsq";
        if (!c.tau2_grid.empty()) {
            json grid = json::array();
            for (double t : c.tau2_grid) grid.push_back(report_number(t));
            j["scan_tau2"] = std::move(grid);
        }
    } else if (c.subcommand == "prosecutor") {
        j["N"] = c.population;
        j["m"] = c.trait_count;
    }
    return j;
}

std::string dump_report(const RunConfig& c, json body) {
    json j;
    j["version"] = kVersion;
    j["config"] = config_echo(c);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    return j.dump(2) + "\n";
}

int run_analyze(const RunConfig& c, std::ostream& out) {
    LoadedModel loaded = load_model_file(c.model_path);
    const DiscreteModel& model = loaded.model;
    const Marginalization& marg = loaded.marg;

    EvidenceReport report = build_report(model, marg, c.observed, c.hypothesis_psi, c.eta);

    if (c.mixture_p) {
        std::optional<Distribution> spike;
        if (c.mixture_spike_path) spike = load_spike_file(*c.mixture_spike_path, model);
        MixturePrior mix(model, marg, *c.mixture_psi0, *c.mixture_p, std::move(spike));
        const double bf = bf_mixture(model, mix, c.observed).value;
        report.bf_mixture = bf;
        report.rb_mixture = rb_mixture(model, mix, c.observed).value;
        report.spike_matches_conditional = mix.spike_matches_conditional();
        report.jeffreys = jeffreys_label(bf);
        // Posterior-based quantities under the mixture come from the
        // flattened model; a non-matching spike is a contradiction in prior
        // beliefs and is visible through the flag above.
        if (c.hypothesis_psi) {
            const DiscreteModel flat = flatten(model, mix);
            report.strength = strength(flat, marg, c.observed, *c.hypothesis_psi);
        }
    }

    json body;
    body["report"] = to_json(report);
    if (c.gamma) {
        body["credible_region"] = to_json(credible_region(model, marg, c.observed, *c.gamma));
    }
    write_output(c.out_path, dump_report(c, std::move(body)), out);
    return 0;
}

int run_robustness(const RunConfig& c, std::ostream& out) {
    LoadedModel loaded = load_model_file(c.model_path);
    const DiscreteModel& model = loaded.model;
    const std::vector<double> q = load_q_file(c.q_path, model);

    Contamination spec =
        c.family == "lin"
            ? Contamination(LinearContamination(model, q))
            : Contamination(GeometricContamination(model, Distribution(q)));
    const ScanTarget target =
        c.target == "rb" ? ScanTarget::RelativeBelief : ScanTarget::BayesFactor;

    double closed = 0.0;
    if (c.family == "lin") {
        const auto& lin = std::get<LinearContamination>(spec);
        closed = target == ScanTarget::RelativeBelief
                     ? rb_logderiv_linear(model, lin, c.observed)
                     : bf_logderiv_linear(model, lin, c.theta0, c.observed);
    } else {
        const auto& geo = std::get<GeometricContamination>(spec);
        closed = target == ScanTarget::RelativeBelief
                     ? rb_logderiv_geometric(model, geo, c.observed)
                     : bf_logderiv_geometric(model, geo, c.theta0, c.observed);
    }
    const double fd = fd_logderiv(model, spec, target, c.theta0, c.observed);
    const std::vector<EpsScanRow> rows =
        eps_scan(model, spec, target, c.theta0, c.observed, c.eps_grid);

    json body;
    body["closed_form"] = report_number(closed);
    body["fd_estimate"] = report_number(fd);
    body["abs_gap"] = report_number(std::abs(closed - fd));
    write_output(c.out_path, dump_report(c, std::move(body)), out);
    write_output(c.csv_path, eps_scan_csv(rows), out);
    return 0;
}

int run_gaussian(const RunConfig& c, std::ostream& out) {
    NormalConjugateSpec spec;
    spec.mu0 = c.mu0;
    spec.tau2 = c.tau2;
    spec.alpha0 = c.alpha0;
    spec.beta0 = c.beta0;
    spec.p = c.p;
    spec.n = c.n;
    SufficientStat stat;
    stat.xbar = c.xbar;
    stat.s2 = c.s2_is_variance ? c.s2 * (c.n - 1) : c.s2;

    const double rb = rb_normal(spec, stat);
    json body;
    body["bf"] = report_number(bf_normal(spec, stat));
    body["rb"] = report_number(rb);
    body["limit"] = report_number(info_inconsistency_limit(spec));
    body["classification"] = to_string(classify(rb));
    write_output(c.out_path, dump_report(c, std::move(body)), out);
    if (!c.tau2_grid.empty()) {
        write_output(c.csv_path, diffuse_scan_csv(diffuse_scan(spec, stat, c.tau2_grid)), out);
    }
    return 0;
}

int run_prosecutor(const RunConfig& c, std::ostream& out) {
    const ProsecutorResult res = prosecutor(c.population, c.trait_count);
    json body;
    body["report"] = to_json(res);
    body["report"]["classification"] = to_string(classify(res.bf));
    body["report"]["jeffreys"] = jeffreys_label(res.bf);
    write_output(c.out_path, dump_report(c, std::move(body)), out);
    return 0;
}

std::string strip_prefix(const std::string& value, const std::string& prefix,
                         const std::string& flag) {
    if (value.rfind(prefix, 0) != 0) {
        throw ValidationError(flag + " expects " + prefix + "<value>, got \"" + value + "\"");
    }
    return value.substr(prefix.size());
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"relative belief / Bayes factor evidence engine"};
    app.require_subcommand(1);
    RunConfig c;

    std::string hypothesis;
    std::vector<std::string> mixture_kv;
    std::string eps_text;
    std::string scan_tau2_text;
    bool variance_flag = false;
    bool sumsq_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out_path, "report path (default: stdout)");
        sub->add_option("--seed", c.seed, "seed echoed into the report")->default_val(0);
    };

    CLI::App* analyze = app.add_subcommand("analyze", "evidence report for a discrete model");
    analyze->add_option("--model", c.model_path, "model JSON file")->required();
    analyze->add_option("--observed", c.observed, "observed x label")->required();
    analyze->add_option("--hypothesis", hypothesis, "hypothesis as psi=<label>");
    analyze->add_option("--gamma", c.gamma, "credible region level");
    analyze->add_option("--eta", c.eta, "half-width of the no-evidence band")->default_val(0.0);
    analyze->add_option("--mixture", mixture_kv, "p=<v> psi0=<label> [spike=<file>]")
        ->expected(2, 3);
    add_common(analyze);

    CLI::App* rob = app.add_subcommand("robustness", "prior contamination sensitivity");
    rob->add_option("--model", c.model_path, "model JSON file")->required();
    rob->add_option("--observed", c.observed, "observed x label")->required();
    rob->add_option("--family", c.family, "lin | geo")
        ->required()
        ->check(CLI::IsMember({"lin", "geo"}));
    rob->add_option("--q", c.q_path, "direction file")->required();
    rob->add_option("--target", c.target, "rb | bf")
        ->required()
        ->check(CLI::IsMember({"rb", "bf"}));
    rob->add_option("--theta0", c.theta0, "theta label under assessment")->required();
    rob->add_option("--eps", eps_text, "grid a:step:b")->required();
    rob->add_option("--csv", c.csv_path, "scan CSV path (default: stdout)");
    add_common(rob);

    CLI::App* gauss = app.add_subcommand("gaussian", "normal location-scale closed forms");
    gauss->add_option("--mu0", c.mu0)->required();
    gauss->add_option("--tau2", c.tau2)->required();
    gauss->add_option("--alpha0", c.alpha0)->required();
    gauss->add_option("--beta0", c.beta0)->required();
    gauss->add_option("--n", c.n)->required();
    gauss->add_option("--xbar", c.xbar)->required();
    gauss->add_option("--s2", c.s2)->required();
    gauss->add_flag("--sumsq", sumsq_flag, "s2 is the centered sum of squares (default)");
    gauss->add_flag("--variance", variance_flag, "s2 is the sample variance");
    gauss->add_option("--p", c.p, "mixture weight (never affects bf)")->default_val(0.5);
    gauss->add_option("--scan-tau2", scan_tau2_text, "grid a:step:b");
    gauss->add_option("--csv", c.csv_path, "scan CSV path (default: stdout)");
    add_common(gauss);

    CLI::App* pros = app.add_subcommand("prosecutor", "population trait example");
    pros->add_option("--N", c.population, "population size")->required();
    pros->add_option("--m", c.trait_count, "trait carriers")->required();
    add_common(pros);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw ValidationError(e.what());
    }

    c.subcommand = app.get_subcommands().front()->get_name();
    if (!hypothesis.empty()) c.hypothesis_psi = strip_prefix(hypothesis, "psi=", "--hypothesis");
    for (const std::string& kv : mixture_kv) {
        if (kv.rfind("p=", 0) == 0) {
            try {
                c.mixture_p = std::stod(kv.substr(2));
            } catch (const std::exception&) {
                throw ValidationError("--mixture p=<value> is not a number: \"" + kv + "\"");
            }
        } else if (kv.rfind("psi0=", 0) == 0) {
            c.mixture_psi0 = kv.substr(5);
        } else if (kv.rfind("spike=", 0) == 0) {
            c.mixture_spike_path = kv.substr(6);
        } else {
            throw ValidationError("--mixture entries must be p=, psi0= or spike=, got \"" + kv +
                                  "\"");
        }
    }
    if (c.mixture_p.has_value() != c.mixture_psi0.has_value()) {
        throw ValidationError("--mixture needs both p=<value> and psi0=<label>");
    }
    if (c.subcommand == "robustness") c.eps_grid = parse_grid(eps_text);
    if (!scan_tau2_text.empty()) c.tau2_grid = parse_grid(scan_tau2_text);
    if (variance_flag && sumsq_flag) {
        throw ValidationError("--sumsq and --variance are mutually exclusive");
    }
    c.s2_is_variance = variance_flag;
    if (c.gamma && !(*c.gamma >= 0.0 && *c.gamma <= 1.0)) {
        throw ValidationError("--gamma must be in [0,1]");
    }
    if (c.subcommand == "robustness") {
        for (double e : c.eps_grid) {
            if (!(e >= 0.0 && e <= 1.0)) throw ValidationError("--eps values must lie in [0,1]");
        }
    }
    return c;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ValidationError("grid must be a:step:b, got \"" + text + "\"");
    }
    try {
        const double a = std::stod(text.substr(0, c1));
        const double step = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        const double b = std::stod(text.substr(c2 + 1));
        return number_grid(a, step, b);
    } catch (const std::invalid_argument&) {
        throw ValidationError("grid must be numeric a:step:b, got \"" + text + "\"");
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "analyze") return run_analyze(config, out);
        if (config.subcommand == "robustness") return run_robustness(config, out);
        if (config.subcommand == "gaussian") return run_gaussian(config, out);
        if (config.subcommand == "prosecutor") return run_prosecutor(config, out);
        err << "relbel: unknown subcommand \"" << config.subcommand << "\"\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "relbel: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        err << "relbel: " << e.what() << "\n";
        return 3;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "relbel: " << e.what() << "\n";
        return 2;
    }
    return run(config, std::cout, std::cerr);
}

}  // namespace relbel
