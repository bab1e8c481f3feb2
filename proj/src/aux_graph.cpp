#include "tiematch/aux_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tiematch/error.hpp"

namespace tiematch {

std::string AuxNode::label() const {
  switch (kind) {
    case Kind::Blue: return man != kNone ? "a" + std::to_string(man) : "b" + std::to_string(woman);
    case Kind::X: return "x{a" + std::to_string(man) + ",b" + std::to_string(woman) + "}";
    case Kind::Y: return "y{a" + std::to_string(man) + ",b" + std::to_string(woman) + "}";
  }
  return "?";
}

int AuxGraph::count(AuxNode::Kind kind) const {
  return static_cast<int>(
      std::count_if(nodes_.begin(), nodes_.end(), [&](const auto& n) { return n.kind == kind; }));
}

AuxGraph build_aux_graph(const Instance& inst, const AcceptedGraph& g, const Matching& m,
                         const DiffDecomposition& diff) {
  AuxGraph h;
  h.man_node_.assign(inst.num_men(), kNone);
  h.woman_node_.assign(inst.num_women(), kNone);

  auto contract = [&](AuxNode::Kind kind, Man a, Woman b, int path) {
    h.man_node_[a] = h.woman_node_[b] = static_cast<int>(h.nodes_.size());
    h.nodes_.push_back({kind, a, b, path});
  };
  for (std::size_t i = 0; i < diff.components.size(); ++i) {
    const auto& c = diff.components[i];
    // Paths with a single M edge would contract it twice; they are
    // reported separately and left uncontracted here.
    if (c.kind != ComponentKind::AugmentingPath || c.k() < 2) continue;
    contract(AuxNode::Kind::X, c.alpha(1), c.beta(0), static_cast<int>(i));
    contract(AuxNode::Kind::Y, c.alpha(c.k()), c.beta(c.k() - 1), static_cast<int>(i));
  }
  for (Man a = 0; a < inst.num_men(); ++a) {
    if (h.man_node_[a] != kNone) continue;
    h.man_node_[a] = static_cast<int>(h.nodes_.size());
    h.nodes_.push_back({AuxNode::Kind::Blue, a, kNone, kNone});
  }
  for (Woman b = 0; b < inst.num_women(); ++b) {
    if (h.woman_node_[b] != kNone) continue;
    h.woman_node_[b] = static_cast<int>(h.nodes_.size());
    h.nodes_.push_back({AuxNode::Kind::Blue, kNone, b, kNone});
  }

  h.out_.resize(h.nodes_.size());
  h.in_.resize(h.nodes_.size());
  for (const auto& [a, b] : g.edges()) {
    const int from = h.man_node_[a];
    const int to = h.woman_node_[b];
    if (from == to) continue;  // the contracted edge itself
    const int id = static_cast<int>(h.arcs_.size());
    h.arcs_.push_back({from, to, a, b, m.contains(a, b)});
    h.out_[from].push_back(id);
    h.in_[to].push_back(id);
  }
  return h;
}

AuxGraph build_aux_graph(const Instance& inst, const AcceptedGraph& g, const Matching& m,
                         const Matching& opt) {
  return build_aux_graph(inst, g, m, decompose(inst, m, opt));
}

std::vector<CriticalArc> find_critical_arcs(const Instance& inst, const AuxGraph& h,
                                            const Matching& opt, const std::vector<Tier>& tiers) {
  std::vector<CriticalArc> out;
  for (std::size_t i = 0; i < h.arcs().size(); ++i) {
    const AuxArc& arc = h.arcs()[i];
    const Man a = arc.man;
    const Woman b = arc.woman;
    const Woman partner = opt.of_man(a);
    const bool good_enough = partner == kNone || inst.man_rank(a, b) <= inst.man_rank(a, partner);
    if (good_enough && !is_two_promoted(tiers[a]) && !arc.in_m &&
        h.node(arc.from).kind != AuxNode::Kind::Y)
      out.push_back({static_cast<int>(i), a, b});
  }
  return out;
}

std::vector<GoodPath> enumerate_good_paths(const AuxGraph& h) {
  std::vector<GoodPath> out;
  std::vector<bool> on_path(h.nodes().size(), false);
  GoodPath cur;

  std::function<void(int)> extend = [&](int node) {
    if (h.node(node).is_blue_woman()) {
      out.push_back(cur);
      return;
    }
    for (const int id : h.out_arcs(node)) {
      const AuxArc& arc = h.arcs()[id];
      if (arc.in_m || on_path[arc.to]) continue;
      on_path[arc.to] = true;
      cur.nodes.push_back(arc.to);
      cur.arcs.push_back(id);
      extend(arc.to);
      cur.nodes.pop_back();
      cur.arcs.pop_back();
      on_path[arc.to] = false;
    }
  };

  for (std::size_t start = 0; start < h.nodes().size(); ++start) {
    if (!h.node(static_cast<int>(start)).is_blue_man()) continue;
    cur = GoodPath{{static_cast<int>(start)}, {}};
    on_path[start] = true;
    extend(static_cast<int>(start));
    on_path[start] = false;
  }
  return out;
}

namespace {

std::string arc_name(const AuxGraph& h, int id) {
  const AuxArc& arc = h.arcs()[id];
  return h.node(arc.from).label() + "->" + h.node(arc.to).label();
}

std::string arc_name(const CriticalArc& c) {
  return "(a" + std::to_string(c.man) + ",b" + std::to_string(c.woman) + ")";
}

int critical_count(const GoodPath& p, const std::vector<CriticalArc>& critical) {
  int n = 0;
  for (const auto& c : critical)
    n += static_cast<int>(std::count(p.arcs.begin(), p.arcs.end(), c.arc));
  return n;
}

}  // namespace

std::optional<std::string> check_no_y_to_x_arc(const AuxGraph& h) {
  for (std::size_t i = 0; i < h.arcs().size(); ++i) {
    const AuxArc& arc = h.arcs()[i];
    if (h.node(arc.from).kind == AuxNode::Kind::Y && h.node(arc.to).kind == AuxNode::Kind::X)
      return "arc " + arc_name(h, static_cast<int>(i));
  }
  return std::nullopt;
}

std::optional<std::string> check_critical_arc_endpoints(const AuxGraph& h,
                                                        const std::vector<CriticalArc>& critical) {
  for (const auto& c : critical) {
    const AuxArc& arc = h.arcs()[c.arc];
    if (h.node(arc.from).kind == AuxNode::Kind::Y)
      return "critical arc " + arc_name(c) + " starts at a y-node";
    if (h.node(arc.to).kind == AuxNode::Kind::X)
      return "critical arc " + arc_name(c) + " ends at an x-node";
  }
  return std::nullopt;
}

std::optional<std::string> check_critical_arc_on_good_path(
    const std::vector<CriticalArc>& critical, const std::vector<GoodPath>& good) {
  for (const auto& c : critical) {
    const bool found = std::any_of(good.begin(), good.end(), [&](const GoodPath& p) {
      return std::find(p.arcs.begin(), p.arcs.end(), c.arc) != p.arcs.end();
    });
    if (!found) return "critical arc " + arc_name(c) + " lies on no good path";
  }
  return std::nullopt;
}

std::optional<std::string> check_good_path_single_critical_arc(
    const std::vector<CriticalArc>& critical, const std::vector<GoodPath>& good) {
  for (std::size_t i = 0; i < good.size(); ++i) {
    const int n = critical_count(good[i], critical);
    if (n > 1) return "good path " + std::to_string(i) + " has " + std::to_string(n) + " critical arcs";
  }
  return std::nullopt;
}

std::optional<std::string> check_good_paths_disjoint(const std::vector<GoodPath>& good) {
  for (std::size_t i = 0; i < good.size(); ++i) {
    const std::set<int> mine(good[i].nodes.begin(), good[i].nodes.end());
    for (std::size_t j = i + 1; j < good.size(); ++j)
      for (const int v : good[j].nodes)
        if (mine.count(v))
          return "good paths " + std::to_string(i) + " and " + std::to_string(j) +
                 " share H node " + std::to_string(v);
  }
  return std::nullopt;
}

HStructure analyze_structure(const Instance& inst, const AuxGraph& h, const Matching& opt,
                             const std::vector<Tier>& tiers) {
  HStructure s;
  s.critical = find_critical_arcs(inst, h, opt, tiers);
  s.good = enumerate_good_paths(h);

  auto require = [](const char* id, const std::optional<std::string>& witness) {
    if (witness) throw Error(ErrorCode::StructureViolation, std::string(id) + ": " + *witness);
  };
  require("no_y_to_x_arc", check_no_y_to_x_arc(h));
  require("critical_arc_endpoints", check_critical_arc_endpoints(h, s.critical));
  require("critical_arc_on_good_path", check_critical_arc_on_good_path(s.critical, s.good));
  require("good_path_single_critical_arc", check_good_path_single_critical_arc(s.critical, s.good));
  require("good_paths_disjoint", check_good_paths_disjoint(s.good));

  for (const auto& c : s.critical)
    for (std::size_t i = 0; i < s.good.size(); ++i)
      if (std::count(s.good[i].arcs.begin(), s.good[i].arcs.end(), c.arc)) {
        s.path_of_critical.push_back(static_cast<int>(i));
        break;
      }
  return s;
}

std::string to_dot(const AuxGraph& h, const std::vector<CriticalArc>& critical,
                   const std::vector<GoodPath>& good) {
  std::ostringstream out;
  out << "digraph H {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < good.size(); ++i) {
    out << "  subgraph cluster_good" << i << " {\n    label=\"good path " << i
        << "\";\n    style=dashed;\n";
    for (const int v : good[i].nodes) out << "    n" << v << ";\n";
    out << "  }\n";
  }
  for (std::size_t v = 0; v < h.nodes().size(); ++v) {
    const AuxNode& n = h.node(static_cast<int>(v));
    const char* color = n.kind == AuxNode::Kind::Blue ? "lightblue"
                        : n.kind == AuxNode::Kind::X ? "salmon"
                                                     : "orange";
    out << "  n" << v << " [label=\"" << n.label() << "\", style=filled, fillcolor=" << color
        << ", shape=" << (n.is_blue_woman() ? "box" : n.is_blue_man() ? "circle" : "doublecircle")
        << "];\n";
  }
  for (std::size_t i = 0; i < h.arcs().size(); ++i) {
    const AuxArc& arc = h.arcs()[i];
    const bool is_critical = std::any_of(critical.begin(), critical.end(),
                                         [&](const CriticalArc& c) { return c.arc == static_cast<int>(i); });
    out << "  n" << arc.from << " -> n" << arc.to << " [label=\"a" << arc.man << "-b" << arc.woman
        << "\"";
    if (arc.in_m) out << ", penwidth=3";
    if (is_critical) out << ", color=red, style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tiematch
