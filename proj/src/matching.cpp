#include "tiematch/matching.hpp"

#include <random>
#include <sstream>

#include "text_lines.hpp"
#include "tiematch/error.hpp"

namespace tiematch {

void Matching::add(Man a, Woman b) {
  if (wife_[a] != kNone || husband_[b] != kNone)
    throw Error(ErrorCode::InvalidArgument, "pair (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ") reuses a matched node");
  wife_[a] = b;
  husband_[b] = a;
  ++size_;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (Man a = 0; a < num_men(); ++a)
    if (wife_[a] != kNone) out.emplace_back(a, wife_[a]);
  return out;
}

Matching extract_matching(const AcceptedGraph& g, const Schedule& sched) {
  // Seeded schedules draw from a stream independent of the proposal phase.
  std::mt19937_64 rng(sched.seed() ^ 0x9e3779b97f4a7c15ULL);
  const bool seeded = sched.policy() == Schedule::Policy::Seeded;
  auto coin = [&] { return std::bernoulli_distribution(0.5)(rng); };

  Matching m(g.num_men(), g.num_women());
  auto take = [&](Vertex u, Vertex v) {
    if (u.is_man())
      m.add(u.id, v.id);
    else
      m.add(v.id, u.id);
  };

  for (const auto& comp : g.components()) {
    const auto& nodes = comp.nodes;
    const int n = static_cast<int>(nodes.size());
    if (comp.is_cycle) {
      // nodes[0] is the lowest man and nodes[1] his lower-id neighbor.
      const int shift = seeded && coin() ? 1 : 0;
      for (int i = shift; i < n; i += 2) take(nodes[i], nodes[(i + 1) % n]);
      continue;
    }
    const int edges = n - 1;
    int start = 0;
    if (edges % 2 == 0) {
      // Both endpoints are on the same side; one stays unmatched.
      const bool drop_front = seeded ? coin() : nodes.front() < nodes.back();
      start = drop_front ? 1 : 0;
    }
    for (int i = start; i + 1 < n; i += 2) take(nodes[i], nodes[i + 1]);
  }
  return m;
}

std::vector<Edge> find_blocking_pairs(const Instance& inst, const Matching& m) {
  std::vector<Edge> out;
  for (Man a = 0; a < inst.num_men(); ++a) {
    const Woman wife = m.of_man(a);
    for (const Woman b : inst.list(a)) {
      if (b == wife) break;  // the rest of his list is worse than his wife
      const Man husband = m.of_woman(b);
      if (husband == kNone || inst.woman_prefers(b, a, husband)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& m) {
  return find_blocking_pairs(inst, m).empty();
}

Matching parse_matching(const Instance& inst, std::string_view text) {
  Matching m(inst.num_men(), inst.num_women());
  for (const auto& line : detail::tokenize(text)) {
    detail::expect(line, 0, "a");
    const auto& man_tok = detail::token_at(line, 1, "man");
    const int a = detail::parse_int(line, man_tok);
    if (a >= inst.num_men())
      throw SyntaxError(line.number, man_tok.column, "man " + std::to_string(a) + " out of range");
    const auto& woman_tok = detail::token_at(line, 2, "woman or '-'");
    if (line.tokens.size() > 3)
      throw SyntaxError(line.number, line.tokens[3].column, "trailing tokens");
    if (woman_tok.text == "-") continue;
    const int b = detail::parse_int(line, woman_tok);
    if (b >= inst.num_women())
      throw SyntaxError(line.number, woman_tok.column,
                        "woman " + std::to_string(b) + " out of range");
    if (!inst.adjacent(a, b))
      throw SyntaxError(line.number, woman_tok.column,
                        "(" + std::to_string(a) + ", " + std::to_string(b) +
                            ") is not an edge of the instance");
    if (m.of_man(a) != kNone || m.of_woman(b) != kNone)
      throw SyntaxError(line.number, man_tok.column, "node matched twice");
    m.add(a, b);
  }
  return m;
}

std::string serialize_matching(const Matching& m) {
  std::ostringstream out;
  for (Man a = 0; a < m.num_men(); ++a) {
    out << "a " << a << " ";
    if (m.of_man(a) == kNone)
      out << "-";
    else
      out << m.of_man(a);
    out << "\n";
  }
  return out.str();
}

}  // namespace tiematch
