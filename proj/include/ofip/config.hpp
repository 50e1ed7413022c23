#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ofip/campaign.hpp"

namespace ofip {

// Configuration error carrying the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Parses and validates a campaign config. An empty checks vector in the
// result means "all applicable checks" (the JSON spelling is "checks":"all").
CampaignConfig parse_config(const nlohmann::json& j);
CampaignConfig load_config(const std::string& path);

// Semantic echo of a config (used for the report's config_echo and for
// writing config files).
nlohmann::json config_to_json(const CampaignConfig& cfg);

}  // namespace ofip
