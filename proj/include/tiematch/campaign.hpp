#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tiematch/instance.hpp"
#include "tiematch/oracle.hpp"
#include "tiematch/ratio.hpp"
#include "tiematch/schedule.hpp"

namespace tiematch {

struct CampaignConfig {
  enum class PolicyMix { Mixed, Deterministic, Seeded };

  int count = 0;
  int n_min = 2;
  int n_max = 8;
  std::vector<double> edge_probs{0.3, 0.6, 0.9};
  std::vector<double> tie_probs{0.0, 0.3, 0.7};
  std::uint64_t seed_base = 1;
  PolicyMix policy = PolicyMix::Mixed;
  int oracle_bound = kDefaultOracleBound;
  std::string out_dir;  // empty: nothing is written
  int jobs = 0;         // 0: hardware concurrency
  bool minimize = true;

  // Throws InvalidArgument.
  void validate() const;
};

// Everything needed to rebuild job i without running the campaign.
struct CampaignJob {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double edge_prob = 0;
  double tie_prob = 0;
  Schedule schedule = Schedule::deterministic();
};

CampaignJob campaign_job(const CampaignConfig& config, int index);

struct CampaignRecord {
  CampaignJob job;
  int num_edges = 0;
  int m_size = 0;
  int opt_size = 0;
  Ratio ratio{1, 1};
  int t = 0;
  int k = 0;
  int ell_sum = 0;
  long steps = 0;
  bool stable = false;
  bool passed = false;
  std::vector<std::string> failed;  // lemma ids, or "error:<code>"
  // Components of M xor OPT keyed "<kind>:<edges>", sorted.
  std::vector<std::pair<std::string, int>> components;
};

struct CampaignFailure {
  int index = 0;
  std::vector<std::string> failed;
  std::string instance_text;
  std::string minimized_text;
  std::string report_text;
};

struct CampaignReport {
  std::vector<CampaignRecord> records;
  std::vector<CampaignFailure> failures;
  Ratio max_ratio{1, 1};

  bool passed() const { return failures.empty(); }
  // Tab-separated, one header line then one line per record.
  std::string to_tsv() const;
  std::string summary() const;
};

CampaignRecord evaluate_job(const CampaignJob& job, int oracle_bound);

CampaignReport run_campaign(const CampaignConfig& config);

// Greedy deletion of men, women and edges while `still_fails` holds.
Instance minimize_witness(const Instance& inst,
                          const std::function<bool(const Instance&)>& still_fails);

}  // namespace tiematch
