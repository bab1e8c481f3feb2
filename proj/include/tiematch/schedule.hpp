#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tiematch/instance.hpp"

namespace tiematch {

struct ScriptEvent {
  enum class Kind { Propose, RejectTiebreak };

  Kind kind = Kind::Propose;
  Man man = kNone;
  int proposal = 1;  // 1 or 2
  Woman woman = kNone;  // RejectTiebreak only

  static ScriptEvent propose(Man a, int proposal) { return {Kind::Propose, a, proposal, kNone}; }
  static ScriptEvent reject(Woman b, Man a, int proposal) {
    return {Kind::RejectTiebreak, a, proposal, b};
  }

  friend bool operator==(const ScriptEvent&, const ScriptEvent&) = default;
};

// Resolves every choice the algorithm leaves open: which pending proposal
// moves next, which of several least desirable proposals a woman rejects,
// and which maximum matching of the accepted graph is output.
//
//  - Deterministic: round-robin over (man, proposal) slots in ascending
//    order; lowest (man, proposal) among tied rejections; lower-id endpoint
//    of an even path left unmatched.
//  - Seeded: every choice drawn from a mt19937_64 seeded with `seed`.
//  - Scripted: follows `script`, then behaves as Deterministic.
class Schedule {
 public:
  enum class Policy { Deterministic, Seeded, Scripted };

  static Schedule deterministic() { return Schedule(Policy::Deterministic, 0, {}); }
  static Schedule seeded(std::uint64_t seed) { return Schedule(Policy::Seeded, seed, {}); }
  static Schedule scripted(std::vector<ScriptEvent> script) {
    return Schedule(Policy::Scripted, 0, std::move(script));
  }

  Policy policy() const { return policy_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<ScriptEvent>& script() const { return script_; }

  std::string describe() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  Schedule(Policy policy, std::uint64_t seed, std::vector<ScriptEvent> script)
      : policy_(policy), seed_(seed), script_(std::move(script)) {}

  Policy policy_;
  std::uint64_t seed_;
  std::vector<ScriptEvent> script_;
};

// One event per line: `propose <man> <1|2>` or
// `reject-tiebreak <woman> <man> <1|2>`. '#' starts a comment.
Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& sched);

}  // namespace tiematch
