#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tiematch/instance.hpp"

namespace tiematch {

// A node of the bipartite graph: a man or a woman.
struct Vertex {
  enum class Side : unsigned char { Man, Woman };

  Side side = Side::Man;
  int id = kNone;

  static constexpr Vertex man(Man a) { return {Side::Man, a}; }
  static constexpr Vertex woman(Woman b) { return {Side::Woman, b}; }
  constexpr bool is_man() const { return side == Side::Man; }
  constexpr bool is_woman() const { return side == Side::Woman; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
  std::string str() const { return (is_man() ? "a" : "b") + std::to_string(id); }
};

using Edge = std::pair<Man, Woman>;

// Maximal path with at least one edge, or cycle, of a graph whose
// degrees are at most two. Path nodes run from one endpoint to the other;
// cycle nodes start at the lowest man and do not repeat the first node.
struct GraphComponent {
  bool is_cycle = false;
  std::vector<Vertex> nodes;

  int num_edges() const {
    const int n = static_cast<int>(nodes.size());
    return is_cycle ? n : n - 1;
  }
};

// The graph of proposals held when the proposal phase stops. The edge set
// is deduplicated: two proposals from a man to the same woman give one edge.
class AcceptedGraph {
 public:
  AcceptedGraph() = default;
  AcceptedGraph(int num_men, int num_women, std::vector<Edge> edges);

  int num_men() const { return static_cast<int>(women_of_.size()); }
  int num_women() const { return static_cast<int>(men_of_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Man a, Woman b) const;

  // Neighbors in ascending id order.
  const std::vector<Woman>& women_of(Man a) const { return women_of_[a]; }
  const std::vector<Man>& men_of(Woman b) const { return men_of_[b]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;

  // Decomposition into maximal paths and cycles (isolated nodes are
  // omitted). Throws DegreeViolation when some node has degree three or more.
  std::vector<GraphComponent> components() const;

  friend bool operator==(const AcceptedGraph& lhs, const AcceptedGraph& rhs) {
    return lhs.edges_ == rhs.edges_ && lhs.women_of_.size() == rhs.women_of_.size() &&
           lhs.men_of_.size() == rhs.men_of_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Woman>> women_of_;
  std::vector<std::vector<Man>> men_of_;
};

}  // namespace tiematch
