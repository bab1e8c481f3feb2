#include "tiematch/accepted_graph.hpp"

#include <algorithm>

#include "tiematch/error.hpp"

namespace tiematch {

AcceptedGraph::AcceptedGraph(int num_men, int num_women, std::vector<Edge> edges)
    : edges_(std::move(edges)), women_of_(num_men), men_of_(num_women) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= num_men || b < 0 || b >= num_women)
      throw Error(ErrorCode::IdOutOfRange, "edge (" + std::to_string(a) + ", " +
                                               std::to_string(b) + ") outside the graph");
    women_of_[a].push_back(b);
    men_of_[b].push_back(a);
  }
  for (auto& l : men_of_) std::sort(l.begin(), l.end());
}

bool AcceptedGraph::has_edge(Man a, Woman b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<Vertex> AcceptedGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  if (v.is_man())
    for (const Woman b : women_of_[v.id]) out.push_back(Vertex::woman(b));
  else
    for (const Man a : men_of_[v.id]) out.push_back(Vertex::man(a));
  return out;
}

int AcceptedGraph::degree(Vertex v) const {
  return static_cast<int>(v.is_man() ? women_of_[v.id].size() : men_of_[v.id].size());
}

int AcceptedGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& l : women_of_) best = std::max(best, l.size());
  for (const auto& l : men_of_) best = std::max(best, l.size());
  return static_cast<int>(best);
}

std::vector<GraphComponent> AcceptedGraph::components() const {
  for (Man a = 0; a < num_men(); ++a)
    if (women_of_[a].size() > 2)
      throw Error(ErrorCode::DegreeViolation, "man " + std::to_string(a) + " has degree " +
                                                  std::to_string(women_of_[a].size()));
  for (Woman b = 0; b < num_women(); ++b)
    if (men_of_[b].size() > 2)
      throw Error(ErrorCode::DegreeViolation, "woman " + std::to_string(b) + " has degree " +
                                                  std::to_string(men_of_[b].size()));

  std::vector<bool> seen_man(num_men(), false);
  std::vector<bool> seen_woman(num_women(), false);
  auto seen = [&](Vertex v) -> std::vector<bool>::reference {
    return v.is_man() ? seen_man[v.id] : seen_woman[v.id];
  };

  // Walks from `start` until no unvisited neighbor remains.
  auto walk = [&](Vertex start) {
    std::vector<Vertex> nodes{start};
    seen(start) = true;
    Vertex cur = start;
    for (;;) {
      bool moved = false;
      for (const Vertex next : neighbors(cur)) {
        if (!seen(next)) {
          seen(next) = true;
          nodes.push_back(next);
          cur = next;
          moved = true;
          break;
        }
      }
      if (!moved) return nodes;
    }
  };

  std::vector<GraphComponent> out;
  std::vector<Vertex> order;
  for (Man a = 0; a < num_men(); ++a) order.push_back(Vertex::man(a));
  for (Woman b = 0; b < num_women(); ++b) order.push_back(Vertex::woman(b));

  for (const Vertex v : order)
    if (!seen(v) && degree(v) == 1) out.push_back({false, walk(v)});
  for (const Vertex v : order) {
    if (seen(v) || degree(v) == 0) continue;
    // Only cycles remain; v is the lowest unvisited node, a man.
    out.push_back({true, walk(v)});
  }
  return out;
}

}  // namespace tiematch
