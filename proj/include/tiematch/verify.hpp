#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiematch/analysis.hpp"
#include "tiematch/ratio.hpp"

namespace tiematch {

struct LemmaResult {
  std::string id;
  bool passed = true;
  std::string witness;  // first counterexample, empty on PASS
};

struct VerificationReport {
  std::vector<LemmaResult> lemmas;
  int m_size = 0;
  int opt_size = 0;
  Ratio ratio{1, 1};  // |OPT| / |M|, 1 when both are empty
  int t = 0;
  int k = 0;
  int ell_sum = 0;
  long steps = 0;

  bool passed() const;
  const LemmaResult* find(const std::string& id) const;
  std::vector<std::string> failed_ids() const;
  // `LEMMA <id> PASS|FAIL [witness]` lines followed by `# key = value` stats.
  std::string to_text() const;
};

// Every statement the analysis relies on, in a fixed order. Ids are stable
// and appear in reports and campaign tables.
const std::vector<std::string>& lemma_ids();

VerificationReport verify_pipeline(const Pipeline& p);

// Engine, M, OPT, decomposition, H and charging, then every check.
VerificationReport verify_all(const Instance& inst, const Schedule& sched,
                              int oracle_bound = kDefaultOracleBound);

}  // namespace tiematch
