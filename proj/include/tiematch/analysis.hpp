#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tiematch/aux_graph.hpp"
#include "tiematch/decompose.hpp"
#include "tiematch/engine.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/matching.hpp"
#include "tiematch/oracle.hpp"
#include "tiematch/schedule.hpp"

namespace tiematch {

// Everything one run produces: the proposal phase, M, OPT, M xor OPT and H
// with its critical arcs and good paths. Building it never throws on a
// structural defect; those are reported by verify_pipeline.
struct Pipeline {
  Instance inst;
  Schedule sched = Schedule::deterministic();
  RunResult run;
  Matching m;
  Matching opt;
  DiffDecomposition diff;
  AuxGraph h;
  std::vector<CriticalArc> critical;
  std::vector<GoodPath> good;

  const std::vector<Tier>& tiers() const { return run.final_state.tier; }
  // Index into `critical` of the critical arc leaving [a], or kNone.
  int critical_arc_of(Man a) const;
  // Index into `good` of the good path through H node `node`, or kNone.
  int good_path_through(int node) const;
};

Pipeline build_pipeline(const Instance& inst, const Schedule& sched,
                        int oracle_bound = kDefaultOracleBound);

// Same, with a given OPT instead of the oracle's.
Pipeline build_pipeline(const Instance& inst, const Schedule& sched, const Matching& opt);

// A proposal from c held by b is a-good if c >=_b a and c is promoted, or
// was rejected by b before, or c >_b a.
bool is_a_good(const Instance& inst, Woman b, Man c, Man a, Tier c_tier, bool c_rejected_by_b);

// a-goodness and popularity at the end of the proposal phase.
class Popularity {
 public:
  Popularity(const Instance& inst, const EngineState& end_state)
      : inst_(&inst), state_(&end_state) {}

  bool is_a_good(Woman b, const ProposalTag& proposal, Man a) const;
  int a_good_count(Woman b, Man a) const;
  // b holds two a-good proposals. a must be on b's list.
  bool is_popular(Woman b, Man a) const { return a_good_count(b, a) == 2; }

 private:
  const Instance* inst_;
  const EngineState* state_;
};

// Replays the event log and reports the first time the number of a-good
// proposals held by some woman drops, or a mismatch with the end state.
std::optional<std::string> check_popularity_over_time(const Instance& inst, const RunResult& run);

// The three jump maps. All throw tiematch::Error: PreconditionViolated when
// the argument is outside the domain, Undefined when no blue woman is
// reachable, StructureViolation when G' or H is malformed.
class Jumps {
 public:
  explicit Jumps(const Pipeline& p) : p_(&p) {}

  // b is unmatched by M and has a G' neighbor.
  bool in_domain(Woman b) const;
  // The other end of the maximal G' path that starts at b.
  Woman mjump(Woman b) const;
  // The blue woman reached from H node `node` (a y-node or an endpoint of
  // a critical arc) along non-M arcs.
  Woman pathjump(int node) const;
  // mjump(b) when blue; otherwise pathjump of its y-node.
  Woman mjumpe(Woman b) const;

 private:
  const Pipeline* p_;
};

struct ChargeSnapshot {
  std::vector<int> men;
  std::vector<int> unpopularity;
  std::vector<int> path;

  int woman_total(Woman b) const { return unpopularity[b] + path[b]; }
  int total() const;
};

// Charges after each of the five stages. Stages act simultaneously on the
// charges present when the stage begins.
struct ChargeLedger {
  int t = 0;
  std::array<ChargeSnapshot, 5> stages;
  std::vector<int> received_stage4;
  std::vector<int> received_stage5;

  const ChargeSnapshot& final_state() const { return stages[4]; }
};

// Throws ChargeLeak if a stage changes the total, or the Jumps errors if a
// transfer target is undefined.
ChargeLedger run_charging(const Pipeline& p);

}  // namespace tiematch
