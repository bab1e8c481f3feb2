#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tiematch/accepted_graph.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/schedule.hpp"

namespace tiematch {

class Matching {
 public:
  Matching() = default;
  Matching(int num_men, int num_women) : wife_(num_men, kNone), husband_(num_women, kNone) {}

  int num_men() const { return static_cast<int>(wife_.size()); }
  int num_women() const { return static_cast<int>(husband_.size()); }

  // Partner or kNone.
  Woman of_man(Man a) const { return wife_[a]; }
  Man of_woman(Woman b) const { return husband_[b]; }
  bool contains(Man a, Woman b) const { return wife_[a] == b && b != kNone; }
  bool matched(Vertex v) const { return v.is_man() ? wife_[v.id] != kNone : husband_[v.id] != kNone; }
  Vertex partner(Vertex v) const {
    return v.is_man() ? Vertex::woman(wife_[v.id]) : Vertex::man(husband_[v.id]);
  }

  // Throws InvalidArgument if either side is already matched.
  void add(Man a, Woman b);

  int size() const { return size_; }
  std::vector<Edge> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Woman> wife_;
  std::vector<Man> husband_;
  int size_ = 0;
};

// Maximum matching of g that covers every degree-two node, built per
// component: odd paths and cycles alternate, even paths leave one endpoint
// unmatched. The schedule settles the two free choices (see Schedule).
Matching extract_matching(const AcceptedGraph& g, const Schedule& sched);

// Pairs (a, b) outside m where both strictly prefer each other to their
// partner in m (being unmatched is worst). Ties never block.
std::vector<Edge> find_blocking_pairs(const Instance& inst, const Matching& m);
bool is_stable(const Instance& inst, const Matching& m);

// `a <man> <woman>` lines, `a <man> -` when unmatched. '#' comments.
// Every pair must be an instance edge and the result injective.
Matching parse_matching(const Instance& inst, std::string_view text);
std::string serialize_matching(const Matching& m);

}  // namespace tiematch
