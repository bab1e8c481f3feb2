#include "tiematch/engine.hpp"

#include <algorithm>
#include <sstream>

#include "tiematch/error.hpp"

namespace tiematch {

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::Basic: return "basic";
    case Tier::Promoted1: return "promoted1";
    case Tier::Promoted2: return "promoted2";
    case Tier::Retired: return "retired";
  }
  return "unknown";
}

bool superior(const Instance& inst, const EngineState& state, Woman b, const ProposalTag& p,
              const ProposalTag& q) {
  if (inst.woman_prefers(b, p.man, q.man)) return true;
  if (!inst.woman_indifferent(b, p.man, q.man)) return false;
  const int lp = promotion_level(state.tier[p.man]);
  const int lq = promotion_level(state.tier[q.man]);
  if (lp == 2 && lq != 2) return true;
  if (lp == 1 && lq == 0) return true;
  return lp == 0 && lq == 0 && state.rejections_by(b, p.man) > 0 &&
         state.rejections_by(b, q.man) == 0;
}

std::vector<int> least_desirable(const Instance& inst, const EngineState& state, Woman b,
                                 std::span<const ProposalTag, 3> candidates) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    bool dominates = false;
    for (int j = 0; j < 3 && !dominates; ++j)
      if (i != j) dominates = superior(inst, state, b, candidates[i], candidates[j]);
    if (!dominates) out.push_back(i);
  }
  return out;
}

long safety_bound(const Instance& inst) {
  return 2L * inst.num_men() * inst.max_list_length() * 6 + inst.num_men();
}

Engine::Engine(const Instance& inst, Schedule sched)
    : inst_(&inst), sched_(std::move(sched)), rng_(sched_.seed()), bound_(safety_bound(inst)) {
  const int n = inst.num_men();
  state_.num_women = inst.num_women();
  state_.tier.assign(n, Tier::Basic);
  state_.position.assign(n, {0, 0});
  state_.held_by.assign(n, {kNone, kNone});
  state_.held.assign(inst.num_women(), {});
  state_.rejections.assign(static_cast<std::size_t>(n) * inst.num_women(), {0, 0, 0, 0});
  // An empty list makes every promotion condition vacuously true.
  for (Man a = 0; a < n; ++a)
    if (inst.list(a).empty()) state_.tier[a] = Tier::Retired;
}

bool Engine::can_act(Man a, int index) const {
  return state_.tier[a] != Tier::Retired && state_.pending(a, index);
}

std::optional<int> Engine::next_slot() {
  const int slots = 2 * inst_->num_men();
  if (script_pos_ < sched_.script().size()) {
    const ScriptEvent& ev = sched_.script()[script_pos_];
    if (ev.kind != ScriptEvent::Kind::Propose)
      throw Error(ErrorCode::ScriptViolation,
                  "event " + std::to_string(script_pos_ + 1) +
                      ": reject-tiebreak for woman " + std::to_string(ev.woman) +
                      " reached without a matching rejection");
    if (ev.man < 0 || ev.man >= inst_->num_men() || !can_act(ev.man, ev.proposal))
      throw Error(ErrorCode::ScriptViolation,
                  "event " + std::to_string(script_pos_ + 1) + ": proposal " +
                      std::to_string(ev.man) + "." + std::to_string(ev.proposal) +
                      " cannot move");
    ++script_pos_;
    const int slot = 2 * ev.man + (ev.proposal - 1);
    cursor_ = (slot + 1) % slots;
    return slot;
  }

  if (sched_.policy() == Schedule::Policy::Seeded) {
    std::vector<int> ready;
    for (int s = 0; s < slots; ++s)
      if (can_act(s / 2, s % 2 + 1)) ready.push_back(s);
    if (ready.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    return ready[pick(rng_)];
  }

  for (int k = 0; k < slots; ++k) {
    const int s = (cursor_ + k) % slots;
    if (can_act(s / 2, s % 2 + 1)) {
      cursor_ = (s + 1) % slots;
      return s;
    }
  }
  return std::nullopt;
}

int Engine::choose_rejection(Woman b, std::span<const ProposalTag, 3> candidates) {
  const std::vector<int> options = least_desirable(*inst_, state_, b, candidates);
  if (options.empty())
    throw Error(ErrorCode::StructureViolation,
                "woman " + std::to_string(b) + " has no least desirable proposal");

  if (script_pos_ < sched_.script().size()) {
    const ScriptEvent& ev = sched_.script()[script_pos_];
    if (ev.kind == ScriptEvent::Kind::RejectTiebreak && ev.woman == b) {
      ++script_pos_;
      for (const int i : options)
        if (candidates[i].man == ev.man && candidates[i].index == ev.proposal) return i;
      throw Error(ErrorCode::ScriptViolation,
                  "event " + std::to_string(script_pos_) + ": proposal " +
                      std::to_string(ev.man) + "." + std::to_string(ev.proposal) +
                      " is not a least desirable proposal at woman " + std::to_string(b));
    }
  }

  if (options.size() > 1 && sched_.policy() == Schedule::Policy::Seeded &&
      script_pos_ >= sched_.script().size()) {
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return options[pick(rng_)];
  }
  return *std::min_element(options.begin(), options.end(), [&](int x, int y) {
    return std::pair(candidates[x].man, candidates[x].index) <
           std::pair(candidates[y].man, candidates[y].index);
  });
}

void Engine::record_rejection(Woman b, const ProposalTag& tag) {
  const Man a = tag.man;
  const Tier tier = state_.tier[a];
  state_.held_by[a][tag.index - 1] = kNone;
  state_.rejection_log.push_back({steps_, b, a, tag.index, tier});
  events_.push_back({steps_, EngineEvent::Kind::Reject, b, a, tag.index, tier});
  ++state_.rejections[static_cast<std::size_t>(a) * state_.num_women + b][static_cast<int>(tier)];
  if (tier == Tier::Retired) return;

  const auto& list = inst_->list(a);
  auto& pos = state_.position[a][tag.index - 1];
  pos = (pos + 1) % static_cast<int>(list.size());

  const bool all_rejected = std::all_of(list.begin(), list.end(), [&](Woman w) {
    return state_.rejections_by(w, a, tier) > 0;
  });
  if (all_rejected) {
    state_.tier[a] = static_cast<Tier>(static_cast<int>(tier) + 1);
    events_.push_back({steps_, EngineEvent::Kind::Promote, kNone, a, 0, state_.tier[a]});
  }
}

std::optional<StepOutcome> Engine::step() {
  const std::optional<int> slot = next_slot();
  if (!slot) return std::nullopt;
  if (steps_ >= bound_)
    throw Error(ErrorCode::NonTermination,
                "exceeded " + std::to_string(bound_) + " proposal steps");
  ++steps_;

  const Man a = *slot / 2;
  const int index = *slot % 2 + 1;
  const Woman b = inst_->list(a)[state_.position[a][index - 1]];
  const ProposalTag incoming{a, index, state_.tier[a]};

  StepOutcome out;
  out.step = steps_;
  out.woman = b;
  out.incoming = incoming;

  auto& held = state_.held[b];
  if (held.size() <= 1) {
    held.push_back(incoming);
    state_.held_by[a][index - 1] = b;
    events_.push_back({steps_, EngineEvent::Kind::Accept, b, a, index, incoming.tier_at_acceptance});
    out.accepted = true;
    return out;
  }

  const std::array<ProposalTag, 3> candidates{held[0], held[1], incoming};
  const int loser = choose_rejection(b, candidates);
  out.rejected = candidates[loser];
  if (loser == 2) {
    record_rejection(b, incoming);
    return out;
  }

  held.erase(held.begin() + loser);
  held.push_back(incoming);
  state_.held_by[a][index - 1] = b;
  events_.push_back({steps_, EngineEvent::Kind::Accept, b, a, index, incoming.tier_at_acceptance});
  out.accepted = true;
  record_rejection(b, candidates[loser]);
  return out;
}

RunResult run(const Instance& inst, const Schedule& sched) {
  Engine engine(inst, sched);
  while (engine.step()) {
  }
  if (!engine.script_exhausted())
    throw Error(ErrorCode::ScriptViolation, "proposal phase stopped before the script ended");

  RunResult result;
  result.final_state = engine.state();
  result.events = engine.events();
  result.steps = engine.steps();
  std::vector<Edge> edges;
  for (Woman b = 0; b < inst.num_women(); ++b)
    for (const auto& tag : result.final_state.held[b]) edges.emplace_back(tag.man, b);
  result.graph = AcceptedGraph(inst.num_men(), inst.num_women(), std::move(edges));
  return result;
}

std::string format_trace(const std::vector<EngineEvent>& events) {
  std::ostringstream out;
  for (const auto& ev : events) {
    if (ev.kind == EngineEvent::Kind::Promote) continue;
    out << "t=" << ev.step << " " << ev.woman << " "
        << (ev.kind == EngineEvent::Kind::Accept ? "accept" : "reject") << " " << ev.man << "."
        << ev.proposal << " tier=" << to_string(ev.tier) << "\n";
  }
  return out.str();
}

}  // namespace tiematch
