#pragma once

#include <string>

#include "json.hpp"
#include "ofip/campaign.hpp"

namespace ofip {

// JSON form of a campaign report. Serialization is deterministic: keys are
// emitted in sorted order and doubles in shortest round-trip form.
nlohmann::json report_to_json(const CampaignReport& report);

// Canonical byte form (2-space indent, trailing newline).
std::string dump_report(const nlohmann::json& report);

// CSV summary: check_id,trials,passes,worst_slack,worst_trial_index.
std::string report_to_csv(const CampaignReport& report);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

// "<path without .json>.csv".
std::string csv_path_for(const std::string& report_path);

}  // namespace ofip
