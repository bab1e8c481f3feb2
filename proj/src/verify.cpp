#include "tiematch/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tiematch/error.hpp"

namespace tiematch {
namespace {

std::string A(Man a) { return "a" + std::to_string(a); }
std::string B(Woman b) { return "b" + std::to_string(b); }

class Recorder {
 public:
  Recorder() {
    for (const auto& id : lemma_ids()) results_.push_back({id, true, {}});
  }

  void fail(const std::string& id, const std::string& witness) {
    auto it = std::find_if(results_.begin(), results_.end(),
                           [&](const LemmaResult& r) { return r.id == id; });
    if (it == results_.end()) throw Error(ErrorCode::InvalidArgument, "unknown check " + id);
    if (it->passed) {
      it->passed = false;
      it->witness = witness;
    }
  }
  void check(bool ok, const std::string& id, const std::string& witness) {
    if (!ok) fail(id, witness);
  }
  void check(const std::optional<std::string>& witness, const std::string& id) {
    if (witness) fail(id, *witness);
  }

  std::vector<LemmaResult> take() { return std::move(results_); }

 private:
  std::vector<LemmaResult> results_;
};

bool rejected_as_two_promoted(const EngineState& s, Woman b, Man a) {
  return s.rejections_by(b, a, Tier::Promoted2) + s.rejections_by(b, a, Tier::Retired) > 0;
}

void check_engine(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const EngineState& s = p.run.final_state;
  const AcceptedGraph& g = p.run.graph;

  for (Woman b = 0; b < inst.num_women(); ++b)
    r.check(s.held[b].size() <= 2, "engine_degree_bound",
            B(b) + " holds " + std::to_string(s.held[b].size()) + " proposals");
  r.check(g.max_degree() <= 2, "engine_degree_bound",
          "G' has degree " + std::to_string(g.max_degree()));

  for (Man a = 0; a < inst.num_men(); ++a) {
    if (s.tier[a] == Tier::Retired) continue;
    r.check(s.held_by[a][0] != kNone && s.held_by[a][1] != kNone, "engine_quiescent",
            A(a) + " is " + std::string(to_string(s.tier[a])) + " with a pending proposal");
  }

  std::vector<Tier> tier(inst.num_men(), Tier::Basic);
  for (Man a = 0; a < inst.num_men(); ++a)
    if (inst.list(a).empty()) tier[a] = Tier::Retired;
  for (const auto& ev : p.run.events) {
    if (ev.kind != EngineEvent::Kind::Promote) continue;
    r.check(static_cast<int>(ev.tier) == static_cast<int>(tier[ev.man]) + 1,
            "engine_tiers_monotone",
            A(ev.man) + " jumps from " + std::string(to_string(tier[ev.man])) + " to " +
                std::string(to_string(ev.tier)) + " at step " + std::to_string(ev.step));
    tier[ev.man] = ev.tier;
  }
  for (Man a = 0; a < inst.num_men(); ++a)
    r.check(tier[a] == s.tier[a], "engine_tiers_monotone",
            A(a) + " replayed tier differs from the final tier");
}

void check_matchings(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const AcceptedGraph& g = p.run.graph;

  for (const auto& [a, b] : p.m.pairs())
    r.check(g.has_edge(a, b), "m_covers_degree_two",
            "(" + A(a) + "," + B(b) + ") is in M but not in G'");
  for (Man a = 0; a < inst.num_men(); ++a)
    r.check(g.degree(Vertex::man(a)) < 2 || p.m.of_man(a) != kNone, "m_covers_degree_two",
            A(a) + " has degree two and is unmatched");
  for (Woman b = 0; b < inst.num_women(); ++b)
    r.check(g.degree(Vertex::woman(b)) < 2 || p.m.of_woman(b) != kNone, "m_covers_degree_two",
            B(b) + " has degree two and is unmatched");
  int maximum = 0;
  for (const auto& c : g.components())
    maximum += c.is_cycle ? c.num_edges() / 2 : (c.num_edges() + 1) / 2;
  r.check(p.m.size() == maximum, "m_covers_degree_two",
          "|M| = " + std::to_string(p.m.size()) + " but G' has a matching of size " +
              std::to_string(maximum));

  for (const auto& [a, b] : find_blocking_pairs(inst, p.m))
    r.fail("m_stable", "(" + A(a) + "," + B(b) + ") blocks M");
  for (const auto& [a, b] : find_blocking_pairs(inst, p.opt))
    r.fail("opt_stable", "(" + A(a) + "," + B(b) + ") blocks OPT");
}

void check_augmenting_paths(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const AcceptedGraph& g = p.run.graph;
  const EngineState& s = p.run.final_state;
  auto deg_m = [&](Man a) { return g.degree(Vertex::man(a)); };
  auto deg_w = [&](Woman b) { return g.degree(Vertex::woman(b)); };

  for (const auto& c : p.diff.components) {
    if (c.kind != ComponentKind::AugmentingPath) continue;
    r.check(c.num_edges != 3, "no_three_augmenting_path",
            "augmenting path starting at " + A(c.alpha(0)) + " has 3 edges");
    if (c.num_edges != 5) continue;
    const Man a0 = c.alpha(0), a1 = c.alpha(1), a2 = c.alpha(2);
    const Woman b0 = c.beta(0), b1 = c.beta(1), b2 = c.beta(2);
    const std::string where = " on the 5-path starting at " + A(a0);
    const std::string id = "five_path_structure";
    r.check(is_two_promoted(s.tier[a0]) && rejected_as_two_promoted(s, b0, a0), id,
            A(a0) + " is not 2-promoted or was never rejected by " + B(b0) +
                " as 2-promoted" + where);
    r.check(s.tier[a2] == Tier::Basic && inst.man_prefers(a2, b1, b2), id,
            A(a2) + " is not basic or does not prefer " + B(b1) + " to " + B(b2) + where);
    r.check(!is_two_promoted(s.tier[a1]) && inst.man_prefers(a1, b1, b0), id,
            A(a1) + " is 2-promoted or does not prefer " + B(b1) + " to " + B(b0) + where);
    r.check(inst.woman_indifferent(b1, a1, a2), id,
            B(b1) + " is not indifferent between " + A(a1) + " and " + A(a2) + where);
    r.check((deg_w(b0) == 1) == (deg_m(a1) == 1), id,
            "degrees of " + B(b0) + " and " + A(a1) + " disagree on being 1" + where);
    r.check((deg_w(b1) == 1) == (deg_m(a2) == 1), id,
            "degrees of " + B(b1) + " and " + A(a2) + " disagree on being 1" + where);
  }
}

void check_h(const Pipeline& p, Recorder& r) {
  r.check(check_no_y_to_x_arc(p.h), "no_y_to_x_arc");
  r.check(check_critical_arc_endpoints(p.h, p.critical), "critical_arc_endpoints");
  r.check(check_critical_arc_on_good_path(p.critical, p.good), "critical_arc_on_good_path");
  r.check(check_good_path_single_critical_arc(p.critical, p.good), "good_path_single_critical_arc");
  r.check(check_good_paths_disjoint(p.good), "good_paths_disjoint");
}

bool critical_arc_next_to(const Pipeline& p, Woman b) {
  const Man a = p.opt.of_woman(b);
  return a != kNone && p.critical_arc_of(a) != kNone;
}

void check_popularity(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const EngineState& s = p.run.final_state;
  const AcceptedGraph& g = p.run.graph;
  const Popularity pop(inst, s);

  for (Woman b = 0; b < inst.num_women(); ++b) {
    const auto& men = inst.neighbors(b);
    for (const Man a : men) {
      const bool popular = pop.is_popular(b, a);
      for (const Man c : men)
        if (popular && !inst.woman_prefers(b, c, a))
          r.check(pop.is_popular(b, c), "popularity_preference_monotone",
                  B(b) + " is " + A(a) + "-popular but not " + A(c) + "-popular");
      r.check(popular || s.rejections_by(b, a) <= 1, "unpopular_rejected_once",
              B(b) + " is not " + A(a) + "-popular yet rejected " + A(a) + " " +
                  std::to_string(s.rejections_by(b, a)) + " times");
    }
  }
  r.check(check_popularity_over_time(inst, p.run), "popularity_time_monotone");

  for (Man a = 0; a < inst.num_men(); ++a) {
    if (s.tier[a] != Tier::Basic) continue;
    const auto& ws = g.women_of(a);
    if (ws.empty()) continue;
    const Woman worst = *std::max_element(ws.begin(), ws.end(), [&](Woman x, Woman y) {
      return inst.man_rank(a, x) < inst.man_rank(a, y);
    });
    r.check(!pop.is_popular(worst, a), "less_preferred_neighbor_unpopular",
            "basic " + A(a) + " has less preferred neighbor " + B(worst) + " who is " + A(a) +
                "-popular");
  }

  for (const auto& c : p.diff.components) {
    if (c.kind != ComponentKind::AugmentingPath || c.num_edges != 5) continue;
    const Man a1 = c.alpha(1);
    const Woman b1 = c.beta(1);
    if (!pop.is_popular(b1, a1))
      r.check(critical_arc_next_to(p, b1), "five_path_critical_arc",
              B(b1) + " is not " + A(a1) + "-popular and has no critical arc next to her");
  }
}

void check_jumps(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const AuxGraph& h = p.h;
  const AcceptedGraph& g = p.run.graph;
  const Jumps jumps(p);

  std::vector<bool> on_good(inst.num_women(), false);
  for (const auto& path : p.good)
    for (const int n : path.nodes)
      if (h.node(n).woman != kNone) on_good[h.node(n).woman] = true;

  std::map<Woman, Woman> mj_seen, mje_seen;
  for (Woman b = 0; b < inst.num_women(); ++b) {
    if (!jumps.in_domain(b)) continue;
    Woman c = kNone;
    try {
      c = jumps.mjump(b);
    } catch (const Error& e) {
      r.fail("mjump_well_defined", B(b) + ": " + e.what());
      continue;
    }
    r.check(p.m.of_woman(c) != kNone, "mjump_well_defined",
            "mjump(" + B(b) + ") = " + B(c) + " is unmatched");
    if (auto [it, fresh] = mj_seen.emplace(c, b); !fresh)
      r.fail("mjump_injective", "mjump(" + B(it->second) + ") = mjump(" + B(b) + ") = " + B(c));
    const int node = h.node_of_woman(c);
    const auto kind = h.node(node).kind;
    r.check(kind != AuxNode::Kind::X, "mjump_blue_or_y",
            "mjump(" + B(b) + ") = " + B(c) + " lies in an x-node");
    if (kind == AuxNode::Kind::Y) {
      const bool has_out = !h.out_arcs(node).empty();
      r.check(has_out, "y_jump_has_outgoing_arc",
              "mjump(" + B(b) + ") lies in " + h.node(node).label() + " with no outgoing arc");
    }

    Woman e = kNone;
    try {
      e = jumps.mjumpe(b);
    } catch (const Error& ex) {
      r.fail("mjumpe_blue", "mjumpe(" + B(b) + "): " + ex.what());
      continue;
    }
    r.check(h.woman_in(e, AuxNode::Kind::Blue), "mjumpe_blue",
            "mjumpe(" + B(b) + ") = " + B(e) + " is not blue");
    if (!on_good[b]) continue;
    if (kind == AuxNode::Kind::Y)
      r.check(g.degree(Vertex::woman(e)) == 2, "mjumpe_degree",
              "mjumpe(" + B(b) + ") = " + B(e) + " has degree " +
                  std::to_string(g.degree(Vertex::woman(e))));
    r.check(p.m.of_woman(e) != kNone, "mjumpe_matched",
            "mjumpe(" + B(b) + ") = " + B(e) + " is unmatched");
    if (auto [it, fresh] = mje_seen.emplace(e, b); !fresh)
      r.fail("mjumpe_injective",
             "mjumpe(" + B(it->second) + ") = mjumpe(" + B(b) + ") = " + B(e));
  }

  std::map<Woman, Man> pj_seen;
  for (std::size_t i = 0; i < p.critical.size(); ++i) {
    const CriticalArc& c = p.critical[i];
    const AuxArc& arc = h.arcs()[c.arc];
    Woman tail = kNone, head = kNone;
    try {
      tail = jumps.pathjump(arc.from);
      head = jumps.pathjump(arc.to);
    } catch (const Error& e) {
      r.fail("pathjump_matches_good_path",
             "critical arc " + A(c.man) + "->" + B(c.woman) + ": " + e.what());
      continue;
    }
    r.check(tail == head, "pathjump_matches_good_path",
            "pathjump differs at the ends of critical arc " + A(c.man) + "->" + B(c.woman));
    const int gp = p.good_path_through(arc.from);
    if (gp != kNone) {
      const Woman end = h.node(p.good[gp].nodes.back()).woman;
      r.check(end == tail, "pathjump_matches_good_path",
              "pathjump(" + A(c.man) + ") = " + B(tail) + " but its good path ends at " + B(end));
    }
    if (auto [it, fresh] = pj_seen.emplace(tail, c.man); !fresh && it->second != c.man)
      r.fail("pathjump_injective", "critical arcs from " + A(it->second) + " and " + A(c.man) +
                                       " both jump to " + B(tail));
  }
}

// Women of each component in path order with the stage-5 snapshot.
void check_charging(const Pipeline& p, Recorder& r) {
  const Instance& inst = p.inst;
  const AuxGraph& h = p.h;
  ChargeLedger ledger;
  try {
    ledger = run_charging(p);
  } catch (const Error& e) {
    r.fail("charge_conservation", e.what());
    return;
  }
  r.check(ledger.stages[0].total() == p.diff.t, "counting_identities",
          "initial charge " + std::to_string(ledger.stages[0].total()) + " != t");
  const ChargeSnapshot& fin = ledger.final_state();

  for (Man a = 0; a < inst.num_men(); ++a)
    r.check(fin.men[a] == 0, "charge_only_matched_women", A(a) + " still holds charge");

  std::vector<bool> five_path_man(inst.num_men(), false), five_path_woman(inst.num_women(), false);
  for (const auto& c : p.diff.components)
    if (c.kind == ComponentKind::AugmentingPath && c.num_edges == 5)
      for (const Vertex v : c.nodes) (v.is_man() ? five_path_man : five_path_woman)[v.id] = true;

  const ChargeSnapshot& after3 = ledger.stages[2];
  for (Woman b = 0; b < inst.num_women(); ++b) {
    const bool matched = p.m.of_woman(b) != kNone;
    r.check(matched || fin.woman_total(b) == 0, "charge_only_matched_women",
            "unmatched " + B(b) + " ends with charge " + std::to_string(fin.woman_total(b)));
    r.check(fin.path[b] == 0 || h.woman_in(b, AuxNode::Kind::Blue), "path_charge_only_blue",
            "non-blue " + B(b) + " has path-charge " + std::to_string(fin.path[b]));
    r.check(fin.unpopularity[b] == 0 || !h.woman_in(b, AuxNode::Kind::X),
            "x_node_no_unpopularity_charge",
            B(b) + " in an x-node has unpopularity-charge " + std::to_string(fin.unpopularity[b]));
    r.check(!five_path_woman[b] || fin.woman_total(b) == 0, "five_path_women_zero_charge",
            B(b) + " on a 5-path ends with charge " + std::to_string(fin.woman_total(b)));

    r.check(after3.woman_total(b) <= 2, "unpopularity_charge_bound",
            B(b) + " holds " + std::to_string(after3.woman_total(b)) + " after stage 3");
    const Man husband = p.m.of_woman(b);
    if (husband == kNone || !five_path_man[husband])
      r.check(after3.woman_total(b) <= 1, "unpopularity_charge_bound",
              B(b) + " is not matched to a 5-path man and holds " +
                  std::to_string(after3.woman_total(b)) + " after stage 3");
    r.check(fin.unpopularity[b] <= 2, "unpopularity_charge_bound",
            B(b) + " ends with unpopularity-charge " + std::to_string(fin.unpopularity[b]));

    r.check(fin.path[b] <= 2, "path_charge_bound",
            B(b) + " ends with path-charge " + std::to_string(fin.path[b]));
    r.check(ledger.received_stage4[b] == 0 || ledger.received_stage5[b] == 0, "path_charge_bound",
            B(b) + " receives charge at stages 4 and 5");
    r.check(ledger.received_stage4[b] <= 2 && ledger.received_stage5[b] <= 2, "path_charge_bound",
            B(b) + " receives more than 2 in one stage");

    r.check(fin.woman_total(b) <= 3, "total_charge_bound",
            B(b) + " ends with charge " + std::to_string(fin.woman_total(b)));
  }

  for (const auto& c : p.diff.components) {
    int sum = 0;
    for (const Vertex v : c.nodes)
      if (v.is_woman()) sum += fin.woman_total(v.id);
    const std::string name = to_string(c.kind) + " through " + c.nodes.front().str();
    r.check(sum <= 3 * c.ell, "component_charge_bound",
            name + " carries " + std::to_string(sum) + " > 3*" + std::to_string(c.ell));
    if (c.kind != ComponentKind::AugmentingPath) continue;
    r.check(sum <= 3 * c.ell, "augmenting_path_charge_bound",
            name + " carries " + std::to_string(sum) + " > 3*" + std::to_string(c.ell));

    const int k = c.k();
    if (c.num_edges >= 7) {
      bool zero = false;
      for (int i = 1; i <= k - 1; ++i) zero = zero || fin.unpopularity[c.beta(i)] == 0;
      r.check(zero, "long_path_zero_unpopularity",
              "every inner woman of " + name + " keeps unpopularity-charge");
    }

    // alpha_i points left when he prefers beta_{i-1} to beta_i.
    auto left = [&](int i) { return inst.man_prefers(c.alpha(i), c.beta(i - 1), c.beta(i)); };
    r.check(left(k), "pointing_claim", A(c.alpha(k)) + " at the end of " + name + " points right");
    bool some_right = false;
    for (int i = 1; i <= k - 1; ++i) {
      if (left(i)) continue;
      some_right = true;
      if (left(i + 1))
        r.check(inst.woman_indifferent(c.beta(i), c.alpha(i), c.alpha(i + 1)), "pointing_claim",
                B(c.beta(i)) + " is not indifferent between " + A(c.alpha(i)) + " and " +
                    A(c.alpha(i + 1)));
    }
    if (c.num_edges >= 7) {
      bool all_charged = true;
      for (int i = 1; i <= k - 1; ++i) all_charged = all_charged && after3.unpopularity[c.beta(i)] +
                                                                        after3.path[c.beta(i)] > 0;
      // The existence part is argued under the hypothesis that every inner
      // woman keeps charge through stage 3.
      if (all_charged)
        r.check(some_right, "pointing_claim", "no inner man of " + name + " points right");
    }
  }
  for (const auto& [a, b] : p.diff.shared)
    r.check(fin.woman_total(b) <= 3, "component_charge_bound",
            "shared edge (" + A(a) + "," + B(b) + ") carries " + std::to_string(fin.woman_total(b)));
}

void check_counting(const Pipeline& p, Recorder& r, VerificationReport& rep) {
  const int t = p.diff.t, k = p.diff.k, l = p.diff.ell_sum;
  const std::string vals = "t=" + std::to_string(t) + " k=" + std::to_string(k) +
                           " l=" + std::to_string(l) + " |M|=" + std::to_string(p.m.size()) +
                           " |OPT|=" + std::to_string(p.opt.size());
  r.check(t <= 3 * l, "counting_identities", "t > 3l: " + vals);
  r.check(k <= l, "counting_identities", "k > l: " + vals);
  r.check(p.m.size() >= l + 2 * (t + k), "counting_identities", "|M| < l + 2(t+k): " + vals);
  r.check(p.opt.size() <= l + 3 * (t + k), "counting_identities", "|OPT| > l + 3(t+k): " + vals);

  if (p.m.size() == 0) {
    r.check(p.opt.size() == 0, "ratio_bound", "M is empty but " + vals);
    rep.ratio = p.opt.size() == 0 ? Ratio(1, 1) : Ratio(1, 0);
    return;
  }
  rep.ratio = Ratio(p.opt.size(), p.m.size());
  const int den = l + 2 * (t + k);
  const Ratio bound(l + 3 * (t + k), den);
  const Ratio split = kThirteenNinths + Ratio(-4 * l + t + k, 9 * den);
  r.check(rep.ratio <= bound, "ratio_bound", rep.ratio.str() + " > " + bound.str() + ": " + vals);
  r.check(bound == split, "ratio_bound", "identity fails: " + bound.str() + " vs " + split.str());
  r.check(bound <= kThirteenNinths, "ratio_bound", bound.str() + " > 13/9: " + vals);
  r.check(rep.ratio <= kThirteenNinths, "ratio_bound", rep.ratio.str() + " > 13/9");
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "engine_degree_bound",
      "engine_quiescent",
      "engine_tiers_monotone",
      "m_covers_degree_two",
      "m_stable",
      "opt_stable",
      "no_three_augmenting_path",
      "five_path_structure",
      "no_y_to_x_arc",
      "critical_arc_endpoints",
      "critical_arc_on_good_path",
      "good_path_single_critical_arc",
      "good_paths_disjoint",
      "popularity_preference_monotone",
      "popularity_time_monotone",
      "unpopular_rejected_once",
      "less_preferred_neighbor_unpopular",
      "five_path_critical_arc",
      "mjump_well_defined",
      "mjump_injective",
      "mjump_blue_or_y",
      "y_jump_has_outgoing_arc",
      "mjumpe_blue",
      "mjumpe_degree",
      "mjumpe_matched",
      "mjumpe_injective",
      "pathjump_injective",
      "pathjump_matches_good_path",
      "charge_conservation",
      "charge_only_matched_women",
      "path_charge_only_blue",
      "x_node_no_unpopularity_charge",
      "five_path_women_zero_charge",
      "unpopularity_charge_bound",
      "path_charge_bound",
      "total_charge_bound",
      "long_path_zero_unpopularity",
      "pointing_claim",
      "augmenting_path_charge_bound",
      "component_charge_bound",
      "counting_identities",
      "ratio_bound",
  };
  return ids;
}

bool VerificationReport::passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.passed; });
}

const LemmaResult* VerificationReport::find(const std::string& id) const {
  for (const auto& l : lemmas)
    if (l.id == id) return &l;
  return nullptr;
}

std::vector<std::string> VerificationReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& l : lemmas)
    if (!l.passed) out.push_back(l.id);
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& l : lemmas) {
    out << "LEMMA " << l.id << (l.passed ? " PASS" : " FAIL");
    if (!l.passed) out << ' ' << l.witness;
    out << '\n';
  }
  out << "# |M| = " << m_size << "\n# |OPT| = " << opt_size << "\n# ratio = " << ratio.str()
      << "\n# t = " << t << "\n# k = " << k << "\n# ell_sum = " << ell_sum
      << "\n# steps = " << steps << '\n';
  return out.str();
}

VerificationReport verify_pipeline(const Pipeline& p) {
  Recorder r;
  VerificationReport rep;
  rep.m_size = p.m.size();
  rep.opt_size = p.opt.size();
  rep.t = p.diff.t;
  rep.k = p.diff.k;
  rep.ell_sum = p.diff.ell_sum;
  rep.steps = p.run.steps;

  check_engine(p, r);
  check_matchings(p, r);
  check_augmenting_paths(p, r);
  check_h(p, r);
  check_popularity(p, r);
  check_jumps(p, r);
  check_charging(p, r);
  check_counting(p, r, rep);
  rep.lemmas = r.take();
  return rep;
}

VerificationReport verify_all(const Instance& inst, const Schedule& sched, int oracle_bound) {
  return verify_pipeline(build_pipeline(inst, sched, oracle_bound));
}

}  // namespace tiematch
