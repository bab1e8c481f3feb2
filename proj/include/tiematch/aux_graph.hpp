#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiematch/accepted_graph.hpp"
#include "tiematch/decompose.hpp"
#include "tiematch/engine.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/matching.hpp"

namespace tiematch {

// Node of H. Blue nodes hold one person; x- and y-nodes (red) hold the man
// and woman of one contracted M edge.
struct AuxNode {
  enum class Kind : unsigned char { Blue, X, Y };

  Kind kind = Kind::Blue;
  Man man = kNone;
  Woman woman = kNone;
  int path = kNone;  // augmenting-path component index, red nodes only

  bool is_red() const { return kind != Kind::Blue; }
  bool is_blue_man() const { return kind == Kind::Blue && man != kNone; }
  bool is_blue_woman() const { return kind == Kind::Blue && woman != kNone; }
  std::string label() const;
};

// Arc of H for the G' edge (man, woman), oriented from [man] to [woman].
struct AuxArc {
  int from = kNone;
  int to = kNone;
  Man man = kNone;
  Woman woman = kNone;
  bool in_m = false;
};

// G' oriented men to women. For every augmenting path
// alpha_0 - beta_0 - ... - alpha_k - beta_k of M xor OPT, the M edge
// (alpha_1, beta_0) becomes an x-node and (alpha_k, beta_{k-1}) a y-node.
class AuxGraph {
 public:
  const std::vector<AuxNode>& nodes() const { return nodes_; }
  const std::vector<AuxArc>& arcs() const { return arcs_; }
  const std::vector<int>& out_arcs(int node) const { return out_[node]; }
  const std::vector<int>& in_arcs(int node) const { return in_[node]; }

  int node_of(Vertex v) const { return v.is_man() ? man_node_[v.id] : woman_node_[v.id]; }
  int node_of_man(Man a) const { return man_node_[a]; }
  int node_of_woman(Woman b) const { return woman_node_[b]; }
  const AuxNode& node(int i) const { return nodes_[i]; }

  bool man_in(Man a, AuxNode::Kind kind) const { return nodes_[man_node_[a]].kind == kind; }
  bool woman_in(Woman b, AuxNode::Kind kind) const { return nodes_[woman_node_[b]].kind == kind; }

  int count(AuxNode::Kind kind) const;

 private:
  friend AuxGraph build_aux_graph(const Instance&, const AcceptedGraph&, const Matching&,
                                  const DiffDecomposition&);

  std::vector<AuxNode> nodes_;
  std::vector<AuxArc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> man_node_;
  std::vector<int> woman_node_;
};

AuxGraph build_aux_graph(const Instance& inst, const AcceptedGraph& g, const Matching& m,
                         const DiffDecomposition& diff);
AuxGraph build_aux_graph(const Instance& inst, const AcceptedGraph& g, const Matching& m,
                         const Matching& opt);

struct CriticalArc {
  int arc = kNone;
  Man man = kNone;
  Woman woman = kNone;
};

// Directed path of H from a blue man to a blue woman using no M arc.
struct GoodPath {
  std::vector<int> nodes;
  std::vector<int> arcs;
};

// Arcs ([a],[b]) with b at least as good as OPT(a) for a, a not
// 2-promoted, (a,b) not in M and [a] not a y-node.
std::vector<CriticalArc> find_critical_arcs(const Instance& inst, const AuxGraph& h,
                                            const Matching& opt, const std::vector<Tier>& tiers);

// Every good path, by exhaustive search over simple paths.
std::vector<GoodPath> enumerate_good_paths(const AuxGraph& h);

// Structural statements about H. Each returns a witness on failure.
std::optional<std::string> check_no_y_to_x_arc(const AuxGraph& h);
std::optional<std::string> check_critical_arc_endpoints(const AuxGraph& h,
                                                        const std::vector<CriticalArc>& critical);
std::optional<std::string> check_critical_arc_on_good_path(
    const std::vector<CriticalArc>& critical, const std::vector<GoodPath>& good);
std::optional<std::string> check_good_path_single_critical_arc(
    const std::vector<CriticalArc>& critical, const std::vector<GoodPath>& good);
std::optional<std::string> check_good_paths_disjoint(const std::vector<GoodPath>& good);

struct HStructure {
  std::vector<CriticalArc> critical;
  std::vector<GoodPath> good;
  // For each critical arc, the index of the good path containing it.
  std::vector<int> path_of_critical;
};

// Critical arcs and good paths, throwing StructureViolation naming the
// failed statement if any of the five structural checks above fails.
HStructure analyze_structure(const Instance& inst, const AuxGraph& h, const Matching& opt,
                             const std::vector<Tier>& tiers);

// Graphviz rendering: blue / x / y node colors, critical arcs in bold red,
// one cluster per good path.
std::string to_dot(const AuxGraph& h, const std::vector<CriticalArc>& critical,
                   const std::vector<GoodPath>& good);

}  // namespace tiematch
