#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ofip/checks.hpp"

namespace ofip {

enum class Field { Real, Complex, Both };
enum class RealizationKind { Scaled, General, Adversarial };
enum class ProfileKind { Constant, Affine, Table };
enum class MixingKind { Constant, Affine, Hashed };

struct ProfileSpec {
  ProfileKind kind = ProfileKind::Constant;
  // Constant: lower/upper. Affine: value = base + slope * alpha.
  double lower = 1.0;
  double upper = 1.0;
  double lower_base = 1.0, lower_slope = 0.0;
  double upper_base = 1.0, upper_slope = 0.0;
  // Table: values aligned with the campaign alpha grid.
  std::vector<double> table_lower;
  std::vector<double> table_upper;
};

struct MixingSpec {
  MixingKind kind = MixingKind::Constant;
  double t = 0.0;
  double phase = 0.0;
  double t_base = 0.0, t_slope = 0.0;  // affine kind
};

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<std::size_t> dims;
  Field field = Field::Real;
  std::vector<double> alpha_grid;
  ProfileSpec profile;
  MixingSpec mixing;
  RealizationKind realization = RealizationKind::Scaled;
  std::vector<CheckId> checks;
  double tolerance = kDefaultCheckTolerance;
  std::string report_path;
  // Wall-clock stamps make reports non-reproducible, so they are opt-in.
  bool timestamps = false;
};

// Every check id, in report order.
std::vector<CheckId> all_check_ids();

// General-form realizations support only the definition-level checks; the
// inequality suite is stated for the simplified form.
bool check_applicable(CheckId id, RealizationKind realization);

struct Counterexample {
  std::uint64_t trial = 0;   // trial whose inputs were shrunk
  CheckRecord shrunk;        // re-evaluated minimal failing instance
};

struct CheckSummary {
  CheckId id = CheckId::DefiningPredicate;
  std::uint64_t trials = 0;  // instances evaluated
  std::uint64_t passes = 0;
  std::optional<CheckRecord> worst;  // minimal-slack instance; absent when trials == 0
  std::optional<Counterexample> counterexample;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckSummary> checks;
  std::string started;   // empty unless config.timestamps
  std::string finished;

  bool all_pass() const;
};

enum class Execution { Serial, Parallel };

// Runs the campaign. Output is a deterministic function of (config) alone:
// per-trial draws derive from (seed, trial index) and aggregation uses
// order-independent merges, so Serial and Parallel agree bit for bit.
CampaignReport run_campaign(const CampaignConfig& config, Execution execution = Execution::Serial,
                            int threads = 0);

}  // namespace ofip
