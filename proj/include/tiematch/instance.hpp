#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tiematch {

using Man = int;
using Woman = int;
inline constexpr int kNone = -1;

// Tie-groups of one woman, most preferred group first.
using TieGroups = std::vector<std::vector<Man>>;

// Preference lists as read from a file or built by hand; not yet checked.
struct RawInstance {
  int num_men = 0;
  int num_women = 0;
  std::vector<std::vector<Woman>> men_prefs;
  std::vector<TieGroups> women_prefs;

  friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

// A validated one-sided-ties instance. Men rank strictly; women rank by
// tie-group. Immutable once constructed, so it can be shared freely.
class Instance {
 public:
  Instance() = default;

  int num_men() const { return raw_.num_men; }
  int num_women() const { return raw_.num_women; }
  const RawInstance& raw() const { return raw_; }

  const std::vector<Woman>& list(Man a) const { return raw_.men_prefs[a]; }
  const TieGroups& groups(Woman b) const { return raw_.women_prefs[b]; }
  // Men of b in preference order, flattened across tie-groups.
  const std::vector<Man>& neighbors(Woman b) const { return women_flat_[b]; }

  bool adjacent(Man a, Woman b) const { return man_rank_[index(a, b)] != kNone; }
  // Position of b in a's list, or kNone.
  int man_rank(Man a, Woman b) const { return man_rank_[index(a, b)]; }
  // Tie-group index of a in b's list, or kNone.
  int woman_rank(Woman b, Man a) const { return woman_rank_[index(a, b)]; }

  // Strict preferences. Both arguments must be adjacent to the chooser.
  bool man_prefers(Man a, Woman b, Woman other) const {
    return man_rank(a, b) < man_rank(a, other);
  }
  bool woman_prefers(Woman b, Man a, Man other) const {
    return woman_rank(b, a) < woman_rank(b, other);
  }
  bool woman_indifferent(Woman b, Man a, Man other) const {
    return woman_rank(b, a) == woman_rank(b, other);
  }

  int num_edges() const { return num_edges_; }
  int max_list_length() const;

  friend bool operator==(const Instance& lhs, const Instance& rhs) { return lhs.raw_ == rhs.raw_; }

 private:
  friend Instance validate(RawInstance raw);

  std::size_t index(Man a, Woman b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(raw_.num_women) +
           static_cast<std::size_t>(b);
  }

  RawInstance raw_;
  std::vector<std::vector<Man>> women_flat_;
  std::vector<int> man_rank_;
  std::vector<int> woman_rank_;
  int num_edges_ = 0;
};

// Checks ranges, duplicates and adjacency symmetry. Sorts the ids inside
// every tie-group (groups are sets). Throws tiematch::Error.
Instance validate(RawInstance raw);

// Line-oriented text format:
//   men <n>
//   women <m>
//   m <id>: w0 w1 ...
//   w <id>: (a b) (c) ...
// '#' starts a comment. Throws SyntaxError or a validation Error.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Each pair is an edge with probability edge_prob. Men's lists are uniformly
// shuffled; women's lists are shuffled and then each adjacent pair of
// entries is merged into one tie-group with probability tie_prob.
Instance generate_random(int num_men, int num_women, double edge_prob, double tie_prob,
                         std::uint64_t seed);

// Instance with the listed person or edge removed (ids above a removed
// person shift down by one).
Instance remove_man(const Instance& inst, Man a);
Instance remove_woman(const Instance& inst, Woman b);
Instance remove_edge(const Instance& inst, Man a, Woman b);

}  // namespace tiematch
