#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sepstates/io.hpp"

namespace sepstates {

enum class Target { Thm1, Thm2, Lemma1, PmaxConsistency, Monotone };

Target target_from_name(const std::string& name);
std::string target_name(Target t);

struct CampaignConfig {
  Target target = Target::Thm1;
  int instances = 1000;
  int dim_a_min = 2, dim_a_max = 4;
  int dim_b_min = 2, dim_b_max = 4;
  int kraus_max = 16;       // cap on N
  int rounds_min = 1, rounds_max = 2;
  std::uint64_t master_seed = 0;
  double tolerance = tol::inequality;
  int workers = 1;

  void validate() const;
};

struct InstanceResult {
  std::uint64_t seed = 0;
  double min_slack = 0.0;
  int worst_n = 0;
  bool ok = false;
  Json inputs;  // serialized instance, populated on violation or replay
};

struct CampaignReport {
  CampaignConfig config;
  int instances_run = 0;
  std::vector<InstanceResult> violations;
  double slack_min = 0.0, slack_q25 = 0.0, slack_median = 0.0,
         slack_q75 = 0.0, slack_max = 0.0;
  double wall_ms = 0.0;  // informational only; excluded from JSON
};

/// Runs one instance from its derived seed.  With record_inputs the full
/// serialized instance is attached for standalone replay.
InstanceResult run_instance(const CampaignConfig& cfg, std::uint64_t seed,
                            bool record_inputs);

/// Deterministic given (master_seed, instances); independent of workers.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// Regenerate one instance from a recorded seed with verbose per-n output.
Json replay(const CampaignConfig& cfg, std::uint64_t seed);

/// Canonical JSON; wall-clock excluded so equal configs give equal bytes.
Json campaign_report_to_json(const CampaignReport& rep);

}  // namespace sepstates
