#pragma once

#include <json.hpp>

#include "relbel/evidence.hpp"
#include "relbel/gaussian.hpp"
#include "relbel/robustness.hpp"

namespace relbel {

// Numbers in reports carry 12 significant digits; infinities become the
// strings "inf"/"-inf" since JSON has no representation for them.
nlohmann::json report_number(double x);

nlohmann::json to_json(const EvidenceReport& report);
nlohmann::json to_json(const CredibleRegion& region);
nlohmann::json to_json(const ProsecutorResult& result);

// CSV emission for scans; all values with 12 significant digits.
std::string eps_scan_csv(const std::vector<EpsScanRow>& rows);
std::string diffuse_scan_csv(const std::vector<DiffuseRow>& rows);

}  // namespace relbel
