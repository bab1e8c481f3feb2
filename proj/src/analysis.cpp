#include "tiematch/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "tiematch/error.hpp"

namespace tiematch {

int Pipeline::critical_arc_of(Man a) const {
  for (std::size_t i = 0; i < critical.size(); ++i)
    if (critical[i].man == a) return static_cast<int>(i);
  return kNone;
}

int Pipeline::good_path_through(int node) const {
  for (std::size_t i = 0; i < good.size(); ++i)
    if (std::find(good[i].nodes.begin(), good[i].nodes.end(), node) != good[i].nodes.end())
      return static_cast<int>(i);
  return kNone;
}

Pipeline build_pipeline(const Instance& inst, const Schedule& sched, const Matching& opt) {
  Pipeline p;
  p.inst = inst;
  p.sched = sched;
  p.run = run(p.inst, sched);
  p.m = extract_matching(p.run.graph, sched);
  p.opt = opt;
  p.diff = decompose(p.inst, p.m, p.opt);
  p.h = build_aux_graph(p.inst, p.run.graph, p.m, p.diff);
  p.critical = find_critical_arcs(p.inst, p.h, p.opt, p.tiers());
  p.good = enumerate_good_paths(p.h);
  return p;
}

Pipeline build_pipeline(const Instance& inst, const Schedule& sched, int oracle_bound) {
  return build_pipeline(inst, sched, opt_oracle(inst, oracle_bound));
}

bool is_a_good(const Instance& inst, Woman b, Man c, Man a, Tier c_tier, bool c_rejected_by_b) {
  if (!inst.adjacent(a, b))
    throw Error(ErrorCode::PreconditionViolated,
                "man " + std::to_string(a) + " is not on woman " + std::to_string(b) + "'s list");
  if (inst.woman_prefers(b, a, c)) return false;
  return is_promoted(c_tier) || c_rejected_by_b || inst.woman_prefers(b, c, a);
}

bool Popularity::is_a_good(Woman b, const ProposalTag& proposal, Man a) const {
  const Man c = proposal.man;
  return tiematch::is_a_good(*inst_, b, c, a, state_->tier[c], state_->rejections_by(b, c) > 0);
}

int Popularity::a_good_count(Woman b, Man a) const {
  int n = 0;
  for (const auto& p : state_->held[b]) n += is_a_good(b, p, a) ? 1 : 0;
  return n;
}

std::optional<std::string> check_popularity_over_time(const Instance& inst, const RunResult& run) {
  const int nm = inst.num_men();
  const int nw = inst.num_women();
  std::vector<Tier> tier(nm, Tier::Basic);
  for (Man a = 0; a < nm; ++a)
    if (inst.list(a).empty()) tier[a] = Tier::Retired;
  std::vector<std::vector<std::pair<Man, int>>> held(nw);
  std::vector<std::vector<bool>> rejected(nw, std::vector<bool>(nm, false));

  // count[b][i]: a-good proposals held by b for the i-th man on b's list.
  std::vector<std::vector<int>> count(nw);
  for (Woman b = 0; b < nw; ++b) count[b].assign(inst.neighbors(b).size(), 0);

  auto current = [&](Woman b, Man a) {
    int n = 0;
    for (const auto& [c, idx] : held[b])
      n += is_a_good(inst, b, c, a, tier[c], rejected[b][c]) ? 1 : 0;
    return n;
  };
  auto sweep = [&](long step) -> std::optional<std::string> {
    for (Woman b = 0; b < nw; ++b) {
      const auto& men = inst.neighbors(b);
      for (std::size_t i = 0; i < men.size(); ++i) {
        const int now = current(b, men[i]);
        if (now < count[b][i])
          return "after step " + std::to_string(step) + " woman " + std::to_string(b) +
                 " holds " + std::to_string(now) + " a" + std::to_string(men[i]) +
                 "-good proposals, down from " + std::to_string(count[b][i]);
        count[b][i] = now;
      }
    }
    return std::nullopt;
  };

  const auto& events = run.events;
  for (std::size_t i = 0; i < events.size();) {
    const long step = events[i].step;
    for (; i < events.size() && events[i].step == step; ++i) {
      const auto& ev = events[i];
      switch (ev.kind) {
        case EngineEvent::Kind::Accept:
          held[ev.woman].emplace_back(ev.man, ev.proposal);
          break;
        case EngineEvent::Kind::Reject: {
          auto& h = held[ev.woman];
          auto it = std::find(h.begin(), h.end(), std::pair(ev.man, ev.proposal));
          if (it != h.end()) h.erase(it);
          rejected[ev.woman][ev.man] = true;
          break;
        }
        case EngineEvent::Kind::Promote:
          tier[ev.man] = ev.tier;
          break;
      }
    }
    if (auto witness = sweep(step)) return witness;
  }

  const Popularity end(inst, run.final_state);
  for (Woman b = 0; b < nw; ++b) {
    const auto& men = inst.neighbors(b);
    for (std::size_t i = 0; i < men.size(); ++i)
      if (count[b][i] != end.a_good_count(b, men[i]))
        return "replayed count for (b" + std::to_string(b) + ", a" + std::to_string(men[i]) +
               ") differs from the end state";
  }
  return std::nullopt;
}

bool Jumps::in_domain(Woman b) const {
  return p_->m.of_woman(b) == kNone && p_->run.graph.degree(Vertex::woman(b)) > 0;
}

Woman Jumps::mjump(Woman b) const {
  const AcceptedGraph& g = p_->run.graph;
  if (p_->m.of_woman(b) != kNone)
    throw Error(ErrorCode::PreconditionViolated, "mjump: woman " + std::to_string(b) + " is matched");
  if (g.degree(Vertex::woman(b)) == 0)
    throw Error(ErrorCode::PreconditionViolated,
                "mjump: woman " + std::to_string(b) + " is isolated in G'");
  if (g.degree(Vertex::woman(b)) != 1)
    throw Error(ErrorCode::StructureViolation,
                "mjump: unmatched woman " + std::to_string(b) + " has degree two");

  Vertex prev = Vertex::woman(b);
  Vertex cur = g.neighbors(prev).front();
  for (;;) {
    const auto next = g.neighbors(cur);
    if (next.size() == 1) break;
    const Vertex step = next[0] == prev ? next[1] : next[0];
    prev = cur;
    cur = step;
    if (cur == Vertex::woman(b))
      throw Error(ErrorCode::StructureViolation, "mjump: walk returned to its start");
  }
  if (!cur.is_woman())
    throw Error(ErrorCode::StructureViolation,
                "mjump: path from woman " + std::to_string(b) + " ends at man " +
                    std::to_string(cur.id));
  return cur.id;
}

Woman Jumps::pathjump(int node) const {
  const AuxGraph& h = p_->h;
  const AuxNode& start = h.node(node);
  // The tail of a critical arc leaves along it; the good path containing
  // the tail continues from the head.
  int from = kNone;
  bool on_critical = false;
  for (const auto& c : p_->critical) {
    const AuxArc& arc = h.arcs()[c.arc];
    if (arc.from == node) from = arc.to;
    if (arc.from == node || arc.to == node) on_critical = true;
  }
  if (start.kind != AuxNode::Kind::Y && !on_critical)
    throw Error(ErrorCode::PreconditionViolated,
                "pathjump: " + start.label() + " is neither a y-node nor on a critical arc");
  if (from == kNone) from = node;

  // Blue women reachable along directed non-M paths.
  std::vector<bool> seen(h.nodes().size(), false);
  std::vector<int> stack{from};
  std::vector<Woman> found;
  seen[from] = true;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (h.node(cur).is_blue_woman()) found.push_back(h.node(cur).woman);
    for (const int id : h.out_arcs(cur)) {
      if (h.arcs()[id].in_m) continue;
      const int next = h.arcs()[id].to;
      if (!seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  if (found.empty())
    throw Error(ErrorCode::Undefined, "pathjump: no blue woman reachable from " + start.label());
  if (found.size() > 1)
    throw Error(ErrorCode::StructureViolation,
                "pathjump: several blue women reachable from " + start.label());
  return found.front();
}

Woman Jumps::mjumpe(Woman b) const {
  const Woman c = mjump(b);
  const AuxNode& n = p_->h.node(p_->h.node_of_woman(c));
  if (n.kind == AuxNode::Kind::Blue) return c;
  if (n.kind == AuxNode::Kind::Y) return pathjump(p_->h.node_of_woman(c));
  throw Error(ErrorCode::PreconditionViolated,
              "mjumpe: mjump(" + std::to_string(b) + ") = " + std::to_string(c) +
                  " lies in an x-node");
}

int ChargeSnapshot::total() const {
  return std::accumulate(men.begin(), men.end(), 0) +
         std::accumulate(unpopularity.begin(), unpopularity.end(), 0) +
         std::accumulate(path.begin(), path.end(), 0);
}

ChargeLedger run_charging(const Pipeline& p) {
  const Instance& inst = p.inst;
  const AcceptedGraph& g = p.run.graph;
  const Jumps jumps(p);

  ChargeLedger ledger;
  ledger.t = p.diff.t;
  ledger.received_stage4.assign(inst.num_women(), 0);
  ledger.received_stage5.assign(inst.num_women(), 0);

  ChargeSnapshot cur;
  cur.men.assign(inst.num_men(), 0);
  cur.unpopularity.assign(inst.num_women(), 0);
  cur.path.assign(inst.num_women(), 0);

  auto close_stage = [&](int stage) {
    if (cur.total() != ledger.t)
      throw Error(ErrorCode::ChargeLeak, "stage " + std::to_string(stage + 1) + " total " +
                                             std::to_string(cur.total()) + " != t = " +
                                             std::to_string(ledger.t));
    ledger.stages[stage] = cur;
  };

  // 1. The man of the y-node of every 5-augmenting path.
  for (const auto& c : p.diff.components)
    if (c.kind == ComponentKind::AugmentingPath && c.num_edges == 5) cur.men[c.alpha(c.k())] += 1;
  close_stage(0);

  // 2. Men pass to their less preferred neighbor in G'.
  for (Man a = 0; a < inst.num_men(); ++a) {
    if (cur.men[a] == 0) continue;
    const auto& ws = g.women_of(a);
    if (ws.empty())
      throw Error(ErrorCode::StructureViolation,
                  "stage 2: charged man " + std::to_string(a) + " has no neighbor in G'");
    const Woman worst = *std::max_element(ws.begin(), ws.end(), [&](Woman x, Woman y) {
      return inst.man_rank(a, x) < inst.man_rank(a, y);
    });
    cur.unpopularity[worst] += cur.men[a];
    cur.men[a] = 0;
  }
  close_stage(1);

  // 3. Unmatched women pass along their maximal path.
  {
    ChargeSnapshot next = cur;
    for (Woman b = 0; b < inst.num_women(); ++b) {
      const int amount = cur.woman_total(b);
      if (amount == 0 || p.m.of_woman(b) != kNone) continue;
      const Woman target = jumps.mjump(b);
      next.unpopularity[b] -= cur.unpopularity[b];
      next.path[b] -= cur.path[b];
      next.unpopularity[target] += amount;
    }
    cur = next;
  }
  close_stage(2);

  // 4. Women with a critical arc next to them pass to its path jump.
  {
    ChargeSnapshot next = cur;
    for (Woman b = 0; b < inst.num_women(); ++b) {
      const Man a = p.opt.of_woman(b);
      if (a == kNone || p.critical_arc_of(a) == kNone) continue;
      const int amount = cur.woman_total(b);
      if (amount == 0) continue;
      const Woman target = jumps.pathjump(p.h.node_of_man(a));
      next.unpopularity[b] -= cur.unpopularity[b];
      next.path[b] -= cur.path[b];
      next.path[target] += amount;
      ledger.received_stage4[target] += amount;
    }
    cur = next;
  }
  close_stage(3);

  // 5. Unmatched recipients of stage 4 pass on via mjumpe.
  {
    ChargeSnapshot next = cur;
    for (Woman b = 0; b < inst.num_women(); ++b) {
      if (ledger.received_stage4[b] == 0 || p.m.of_woman(b) != kNone) continue;
      const int amount = cur.woman_total(b);
      const Woman target = jumps.mjumpe(b);
      next.unpopularity[b] -= cur.unpopularity[b];
      next.path[b] -= cur.path[b];
      next.path[target] += amount;
      ledger.received_stage5[target] += amount;
    }
    cur = next;
  }
  close_stage(4);
  return ledger;
}

}  // namespace tiematch
