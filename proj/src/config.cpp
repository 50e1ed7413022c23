#include "ofip/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace ofip {

namespace {

using nlohmann::json;

void expect_keys(const json& j, const std::string& scope, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.contains(it.key())) {
      throw ConfigError(scope.empty() ? it.key() : scope + "." + it.key(), "unknown key");
    }
  }
}

double number_at(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError(key, "missing");
  if (!j.at(key).is_number()) throw ConfigError(key, "must be a number");
  return j.at(key).get<double>();
}

std::vector<double> number_array(const json& j, const std::string& key, std::size_t expect = 0) {
  if (!j.is_array()) throw ConfigError(key, "must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(key, "must be an array of numbers");
    out.push_back(v.get<double>());
  }
  if (expect != 0 && out.size() != expect) {
    throw ConfigError(key, "must have exactly " + std::to_string(expect) + " entries");
  }
  return out;
}

ProfileSpec parse_profile(const json& j) {
  if (!j.is_object()) throw ConfigError("profile", "must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("profile.kind", "missing or not a string");
  }
  const std::string kind = j.at("kind").get<std::string>();
  ProfileSpec spec;
  if (kind == "constant") {
    expect_keys(j, "profile", {"kind", "lower", "upper"});
    spec.kind = ProfileKind::Constant;
    spec.lower = number_at(j, "lower");
    spec.upper = number_at(j, "upper");
  } else if (kind == "affine") {
    expect_keys(j, "profile", {"kind", "lower", "upper"});
    spec.kind = ProfileKind::Affine;
    if (!j.contains("lower")) throw ConfigError("profile.lower", "missing");
    if (!j.contains("upper")) throw ConfigError("profile.upper", "missing");
    const auto lo = number_array(j.at("lower"), "profile.lower", 2);
    const auto hi = number_array(j.at("upper"), "profile.upper", 2);
    spec.lower_base = lo[0];
    spec.lower_slope = lo[1];
    spec.upper_base = hi[0];
    spec.upper_slope = hi[1];
  } else if (kind == "table") {
    expect_keys(j, "profile", {"kind", "lower", "upper"});
    spec.kind = ProfileKind::Table;
    if (!j.contains("lower")) throw ConfigError("profile.lower", "missing");
    if (!j.contains("upper")) throw ConfigError("profile.upper", "missing");
    spec.table_lower = number_array(j.at("lower"), "profile.lower");
    spec.table_upper = number_array(j.at("upper"), "profile.upper");
  } else {
    throw ConfigError("profile.kind", "must be one of constant, affine, table");
  }
  return spec;
}

MixingSpec parse_mixing(const json& j) {
  if (!j.is_object()) throw ConfigError("mixing", "must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("mixing.kind", "missing or not a string");
  }
  const std::string kind = j.at("kind").get<std::string>();
  MixingSpec spec;
  if (kind == "constant") {
    expect_keys(j, "mixing", {"kind", "t", "phase"});
    spec.kind = MixingKind::Constant;
    spec.t = number_at(j, "t");
    spec.phase = j.contains("phase") ? number_at(j, "phase") : 0.0;
    if (!(spec.t >= 0.0) || !(spec.t <= 1.0)) throw ConfigError("mixing.t", "must lie in [0,1]");
  } else if (kind == "affine") {
    expect_keys(j, "mixing", {"kind", "t", "phase"});
    spec.kind = MixingKind::Affine;
    if (!j.contains("t")) throw ConfigError("mixing.t", "missing");
    const auto t = number_array(j.at("t"), "mixing.t", 2);
    spec.t_base = t[0];
    spec.t_slope = t[1];
    spec.phase = j.contains("phase") ? number_at(j, "phase") : 0.0;
  } else if (kind == "hashed") {
    expect_keys(j, "mixing", {"kind"});
    spec.kind = MixingKind::Hashed;
  } else {
    throw ConfigError("mixing.kind", "must be one of constant, affine, hashed");
  }
  return spec;
}

}  // namespace

CampaignConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config", "top level must be an object");
  expect_keys(j, "",
              {"seed", "trials", "dims", "field", "alpha_grid", "profile", "mixing",
               "realization", "checks", "tolerance", "report_path", "timestamps"});

  CampaignConfig cfg;

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("seed", "must be a non-negative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }

  if (!j.contains("trials")) throw ConfigError("trials", "missing");
  if (!j.at("trials").is_number_unsigned()) throw ConfigError("trials", "must be a non-negative integer");
  cfg.trials = j.at("trials").get<std::uint64_t>();

  if (!j.contains("dims")) throw ConfigError("dims", "missing");
  if (!j.at("dims").is_array() || j.at("dims").empty()) throw ConfigError("dims", "must be a non-empty array");
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
      throw ConfigError("dims", "entries must be positive integers");
    }
    cfg.dims.push_back(d.get<std::size_t>());
  }

  if (!j.contains("field")) throw ConfigError("field", "missing");
  if (!j.at("field").is_string()) throw ConfigError("field", "must be a string");
  const std::string field = j.at("field").get<std::string>();
  if (field == "real") cfg.field = Field::Real;
  else if (field == "complex") cfg.field = Field::Complex;
  else if (field == "both") cfg.field = Field::Both;
  else throw ConfigError("field", "must be one of real, complex, both");

  if (!j.contains("alpha_grid")) throw ConfigError("alpha_grid", "missing");
  cfg.alpha_grid = number_array(j.at("alpha_grid"), "alpha_grid");
  if (cfg.alpha_grid.empty()) throw ConfigError("alpha_grid", "must be non-empty");
  double prev = 0.0;
  for (double a : cfg.alpha_grid) {
    if (!(a > 0.0) || !(a <= 1.0)) throw ConfigError("alpha_grid", "values must lie in (0,1]");
    if (!(a > prev)) throw ConfigError("alpha_grid", "values must be strictly increasing");
    prev = a;
  }

  if (!j.contains("profile")) throw ConfigError("profile", "missing");
  cfg.profile = parse_profile(j.at("profile"));
  if (cfg.profile.kind == ProfileKind::Table) {
    if (cfg.profile.table_lower.size() != cfg.alpha_grid.size()) {
      throw ConfigError("profile.lower", "must match alpha_grid length");
    }
    if (cfg.profile.table_upper.size() != cfg.alpha_grid.size()) {
      throw ConfigError("profile.upper", "must match alpha_grid length");
    }
  }

  if (!j.contains("mixing")) throw ConfigError("mixing", "missing");
  cfg.mixing = parse_mixing(j.at("mixing"));

  if (j.contains("realization")) {
    if (!j.at("realization").is_string()) throw ConfigError("realization", "must be a string");
    const std::string r = j.at("realization").get<std::string>();
    if (r == "scaled") cfg.realization = RealizationKind::Scaled;
    else if (r == "general") cfg.realization = RealizationKind::General;
    else if (r == "adversarial") cfg.realization = RealizationKind::Adversarial;
    else throw ConfigError("realization", "must be one of scaled, general, adversarial");
  }

  if (!j.contains("checks")) throw ConfigError("checks", "missing");
  const auto& checks = j.at("checks");
  if (checks.is_string()) {
    if (checks.get<std::string>() != "all") throw ConfigError("checks", "string form must be \"all\"");
    cfg.checks.clear();
  } else if (checks.is_array()) {
    if (checks.empty()) throw ConfigError("checks", "array form must be non-empty");
    for (const auto& c : checks) {
      if (!c.is_string()) throw ConfigError("checks", "entries must be strings");
      const auto id = check_id_from_name(c.get<std::string>());
      if (!id) throw ConfigError("checks", "unknown check id '" + c.get<std::string>() + "'");
      cfg.checks.push_back(*id);
    }
  } else {
    throw ConfigError("checks", "must be \"all\" or an array of check ids");
  }

  if (j.contains("tolerance")) {
    if (!j.at("tolerance").is_number()) throw ConfigError("tolerance", "must be a number");
    cfg.tolerance = j.at("tolerance").get<double>();
    if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
      throw ConfigError("tolerance", "must be positive and finite");
    }
  }

  if (!j.contains("report_path")) throw ConfigError("report_path", "missing");
  if (!j.at("report_path").is_string()) throw ConfigError("report_path", "must be a string");
  cfg.report_path = j.at("report_path").get<std::string>();
  if (cfg.report_path.empty()) throw ConfigError("report_path", "must be non-empty");

  if (j.contains("timestamps")) {
    if (!j.at("timestamps").is_boolean()) throw ConfigError("timestamps", "must be a boolean");
    cfg.timestamps = j.at("timestamps").get<bool>();
  }

  return cfg;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  return parse_config(j);
}

nlohmann::json config_to_json(const CampaignConfig& cfg) {
  nlohmann::json j;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["dims"] = cfg.dims;
  j["field"] = cfg.field == Field::Real ? "real" : (cfg.field == Field::Complex ? "complex" : "both");
  j["alpha_grid"] = cfg.alpha_grid;

  nlohmann::json profile;
  switch (cfg.profile.kind) {
    case ProfileKind::Constant:
      profile["kind"] = "constant";
      profile["lower"] = cfg.profile.lower;
      profile["upper"] = cfg.profile.upper;
      break;
    case ProfileKind::Affine:
      profile["kind"] = "affine";
      profile["lower"] = {cfg.profile.lower_base, cfg.profile.lower_slope};
      profile["upper"] = {cfg.profile.upper_base, cfg.profile.upper_slope};
      break;
    case ProfileKind::Table:
      profile["kind"] = "table";
      profile["lower"] = cfg.profile.table_lower;
      profile["upper"] = cfg.profile.table_upper;
      break;
  }
  j["profile"] = profile;

  nlohmann::json mixing;
  switch (cfg.mixing.kind) {
    case MixingKind::Constant:
      mixing["kind"] = "constant";
      mixing["t"] = cfg.mixing.t;
      mixing["phase"] = cfg.mixing.phase;
      break;
    case MixingKind::Affine:
      mixing["kind"] = "affine";
      mixing["t"] = {cfg.mixing.t_base, cfg.mixing.t_slope};
      mixing["phase"] = cfg.mixing.phase;
      break;
    case MixingKind::Hashed:
      mixing["kind"] = "hashed";
      break;
  }
  j["mixing"] = mixing;

  j["realization"] = cfg.realization == RealizationKind::Scaled
                         ? "scaled"
                         : (cfg.realization == RealizationKind::General ? "general" : "adversarial");

  if (cfg.checks.empty()) {
    j["checks"] = "all";
  } else {
    std::vector<std::string> names;
    names.reserve(cfg.checks.size());
    for (CheckId id : cfg.checks) names.emplace_back(check_id_name(id));
    j["checks"] = names;
  }

  j["tolerance"] = cfg.tolerance;
  j["report_path"] = cfg.report_path;
  j["timestamps"] = cfg.timestamps;
  return j;
}

}  // namespace ofip
