#include "relbel/report.hpp"

#include <cmath>
#include <sstream>

#include "relbel/numeric.hpp"

namespace relbel {

using nlohmann::json;

json report_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    return round_sig12(x);
}

json to_json(const EvidenceReport& report) {
    json j;
    json rb = json::object();
    for (const auto& [label, value] : report.rb) rb[label] = report_number(value);
    j["rb"] = std::move(rb);
    j["estimate"] = report.estimate;
    j["plausible_region"] = report.plausible_region;
    j["plausible_content"] = report_number(report.plausible_content);
    if (report.strength) j["strength"] = report_number(*report.strength);
    j["kl"] = report_number(report.kl);
    j["classification"] = to_string(report.classification);
    if (report.jeffreys) j["jeffreys"] = *report.jeffreys;
    if (report.bf_mixture) j["bf_mixture"] = report_number(*report.bf_mixture);
    if (report.rb_mixture) j["rb_mixture"] = report_number(*report.rb_mixture);
    if (report.spike_matches_conditional) {
        j["spike_matches_conditional"] = *report.spike_matches_conditional;
    }
    return j;
}

json to_json(const CredibleRegion& region) {
    json j;
    j["gamma"] = report_number(region.gamma);
    j["cutoff"] = report_number(region.cutoff);
    j["members"] = region.members;
    j["posterior_content"] = report_number(region.posterior_content);
    return j;
}

json to_json(const ProsecutorResult& result) {
    json j;
    j["rb"] = report_number(result.rb);
    j["bf"] = report_number(result.bf);
    j["posterior_guilt"] = report_number(result.posterior_guilt);
    return j;
}

std::string eps_scan_csv(const std::vector<EpsScanRow>& rows) {
    std::ostringstream out;
    out << "eps,value,log_value\n";
    for (const auto& r : rows) {
        out << format_sig12(r.eps) << ',' << format_sig12(r.value) << ','
            << format_sig12(r.log_value) << '\n';
    }
    return out.str();
}

std::string diffuse_scan_csv(const std::vector<DiffuseRow>& rows) {
    std::ostringstream out;
    out << "tau2,bf,rb\n";
    for (const auto& r : rows) {
        out << format_sig12(r.tau2) << ',' << format_sig12(r.bf) << ',' << format_sig12(r.rb)
            << '\n';
    }
    return out.str();
}

}  // namespace relbel
