#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tiematch/accepted_graph.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/schedule.hpp"

namespace tiematch {

// A man's status. Retired means he was rejected by every woman on his list
// as a 2-promoted man and stopped proposing; for every comparison he still
// counts as 2-promoted.
enum class Tier : unsigned char { Basic, Promoted1, Promoted2, Retired };

std::string_view to_string(Tier tier);

constexpr int promotion_level(Tier t) { return t == Tier::Retired ? 2 : static_cast<int>(t); }
constexpr bool is_promoted(Tier t) { return t != Tier::Basic; }
constexpr bool is_two_promoted(Tier t) { return t == Tier::Promoted2 || t == Tier::Retired; }

struct ProposalTag {
  Man man = kNone;
  int index = 1;  // 1 or 2
  Tier tier_at_acceptance = Tier::Basic;

  bool same_proposal(const ProposalTag& other) const {
    return man == other.man && index == other.index;
  }
};

struct RejectionEvent {
  long step = 0;
  Woman woman = kNone;
  Man man = kNone;
  int proposal = 1;
  Tier tier = Tier::Basic;  // the man's tier when rejected

  friend bool operator==(const RejectionEvent&, const RejectionEvent&) = default;
};

// Full history of a run. Promote events carry the new tier and no woman.
struct EngineEvent {
  enum class Kind : unsigned char { Accept, Reject, Promote };

  long step = 0;
  Kind kind = Kind::Accept;
  Woman woman = kNone;
  Man man = kNone;
  int proposal = 0;
  Tier tier = Tier::Basic;

  friend bool operator==(const EngineEvent&, const EngineEvent&) = default;
};

struct EngineState {
  int num_women = 0;
  std::vector<Tier> tier;
  // Per man and proposal: index into his list of the woman it was last
  // sent to (or will be sent to next), and the woman holding it or kNone.
  std::vector<std::array<int, 2>> position;
  std::vector<std::array<Woman, 2>> held_by;
  std::vector<std::vector<ProposalTag>> held;  // per woman, at most two
  std::vector<RejectionEvent> rejection_log;
  // rejections[a * num_women + b][tier]: how often b rejected a at each tier.
  std::vector<std::array<int, 4>> rejections;

  int rejections_by(Woman b, Man a, Tier t) const {
    return rejections[static_cast<std::size_t>(a) * num_women + b][static_cast<int>(t)];
  }
  int rejections_by(Woman b, Man a) const {
    const auto& r = rejections[static_cast<std::size_t>(a) * num_women + b];
    return r[0] + r[1] + r[2] + r[3];
  }
  bool pending(Man a, int index) const { return held_by[a][index - 1] == kNone; }
};

// Whether b ranks proposal p above q: strict preference first, then, among
// men she is indifferent between, higher current tier, then (both basic)
// having been rejected by her before.
bool superior(const Instance& inst, const EngineState& state, Woman b, const ProposalTag& p,
              const ProposalTag& q);

// Indices of the candidates that are superior to none of the others.
std::vector<int> least_desirable(const Instance& inst, const EngineState& state, Woman b,
                                 std::span<const ProposalTag, 3> candidates);

struct StepOutcome {
  long step = 0;
  Woman woman = kNone;
  ProposalTag incoming;
  bool accepted = false;
  std::optional<ProposalTag> rejected;
};

// Upper bound on the number of steps before NonTermination is reported.
long safety_bound(const Instance& inst);

class Engine {
 public:
  Engine(const Instance& inst, Schedule sched);

  // Delivers one pending proposal. Returns nullopt once no man can act.
  std::optional<StepOutcome> step();

  const EngineState& state() const { return state_; }
  const std::vector<EngineEvent>& events() const { return events_; }
  long steps() const { return steps_; }
  bool script_exhausted() const { return script_pos_ >= sched_.script().size(); }

 private:
  bool can_act(Man a, int index) const;
  std::optional<int> next_slot();
  int choose_rejection(Woman b, std::span<const ProposalTag, 3> candidates);
  void record_rejection(Woman b, const ProposalTag& tag);

  const Instance* inst_;
  Schedule sched_;
  std::mt19937_64 rng_;
  EngineState state_;
  std::vector<EngineEvent> events_;
  std::size_t script_pos_ = 0;
  int cursor_ = 0;
  long steps_ = 0;
  long bound_ = 0;
};

struct RunResult {
  AcceptedGraph graph;
  EngineState final_state;
  std::vector<EngineEvent> events;
  long steps = 0;

  const std::vector<RejectionEvent>& rejection_log() const { return final_state.rejection_log; }
};

// Runs the proposal phase to quiescence. Throws ScriptViolation if a
// scripted schedule is left with unconsumed events.
RunResult run(const Instance& inst, const Schedule& sched);

// `t=<step> <woman> {accept|reject} <man>.<prop> tier=<tier>` per line.
std::string format_trace(const std::vector<EngineEvent>& events);

}  // namespace tiematch
