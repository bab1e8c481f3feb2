#include "tiematch/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "text_lines.hpp"
#include "tiematch/error.hpp"

namespace tiematch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ScriptViolation: return "ScriptViolation";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::ChargeLeak: return "ChargeLeak";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string pair_name(Man a, Woman b) {
  return "(man " + std::to_string(a) + ", woman " + std::to_string(b) + ")";
}

}  // namespace

int Instance::max_list_length() const {
  std::size_t best = 0;
  for (const auto& l : raw_.men_prefs) best = std::max(best, l.size());
  return static_cast<int>(best);
}

Instance validate(RawInstance raw) {
  if (raw.num_men < 0 || raw.num_women < 0)
    throw Error(ErrorCode::IdOutOfRange, "negative population size");
  if (raw.men_prefs.size() != static_cast<std::size_t>(raw.num_men))
    throw Error(ErrorCode::IdOutOfRange, "expected " + std::to_string(raw.num_men) +
                                             " men's lists, got " +
                                             std::to_string(raw.men_prefs.size()));
  if (raw.women_prefs.size() != static_cast<std::size_t>(raw.num_women))
    throw Error(ErrorCode::IdOutOfRange, "expected " + std::to_string(raw.num_women) +
                                             " women's lists, got " +
                                             std::to_string(raw.women_prefs.size()));

  Instance inst;
  const std::size_t cells =
      static_cast<std::size_t>(raw.num_men) * static_cast<std::size_t>(raw.num_women);
  inst.man_rank_.assign(cells, kNone);
  inst.woman_rank_.assign(cells, kNone);
  inst.raw_.num_men = raw.num_men;
  inst.raw_.num_women = raw.num_women;

  for (Man a = 0; a < raw.num_men; ++a) {
    const auto& list = raw.men_prefs[a];
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const Woman b = list[pos];
      if (b < 0 || b >= raw.num_women)
        throw Error(ErrorCode::IdOutOfRange, "man " + std::to_string(a) + " lists woman " +
                                                 std::to_string(b));
      if (inst.man_rank_[inst.index(a, b)] != kNone)
        throw Error(ErrorCode::DuplicateEntry, pair_name(a, b) + ": woman repeated in man's list");
      inst.man_rank_[inst.index(a, b)] = static_cast<int>(pos);
    }
  }

  inst.women_flat_.resize(raw.num_women);
  for (Woman b = 0; b < raw.num_women; ++b) {
    auto& groups = raw.women_prefs[b];
    for (std::size_t g = 0; g < groups.size(); ++g) {
      auto& group = groups[g];
      if (group.empty())
        throw Error(ErrorCode::InvalidArgument,
                    "woman " + std::to_string(b) + " has an empty tie-group");
      std::sort(group.begin(), group.end());
      for (const Man a : group) {
        if (a < 0 || a >= raw.num_men)
          throw Error(ErrorCode::IdOutOfRange, "woman " + std::to_string(b) + " lists man " +
                                                   std::to_string(a));
        if (inst.woman_rank_[inst.index(a, b)] != kNone)
          throw Error(ErrorCode::DuplicateEntry,
                      pair_name(a, b) + ": man repeated in woman's groups");
        inst.woman_rank_[inst.index(a, b)] = static_cast<int>(g);
        inst.women_flat_[b].push_back(a);
      }
    }
  }

  for (Man a = 0; a < raw.num_men; ++a) {
    for (Woman b = 0; b < raw.num_women; ++b) {
      const bool by_man = inst.man_rank_[inst.index(a, b)] != kNone;
      const bool by_woman = inst.woman_rank_[inst.index(a, b)] != kNone;
      if (by_man != by_woman)
        throw Error(ErrorCode::AsymmetricAdjacency,
                    pair_name(a, b) + (by_man ? ": listed by the man only"
                                              : ": listed by the woman only"));
      if (by_man) ++inst.num_edges_;
    }
  }

  inst.raw_ = std::move(raw);
  return inst;
}

Instance parse_instance(std::string_view text) {
  using detail::expect;
  using detail::parse_int;
  using detail::token_at;

  const auto lines = detail::tokenize(text);
  if (lines.size() < 2) throw SyntaxError(lines.empty() ? 1 : lines.back().number + 1, 1,
                                          "expected 'men <n>' and 'women <m>' headers");

  auto header = [&](const detail::Line& line, std::string_view word) {
    expect(line, 0, word);
    const int n = parse_int(line, token_at(line, 1, "count"));
    if (line.tokens.size() > 2)
      throw SyntaxError(line.number, line.tokens[2].column, "trailing tokens after count");
    return n;
  };

  RawInstance raw;
  raw.num_men = header(lines[0], "men");
  raw.num_women = header(lines[1], "women");
  raw.men_prefs.resize(raw.num_men);
  raw.women_prefs.resize(raw.num_women);
  std::vector<bool> seen_man(raw.num_men, false);
  std::vector<bool> seen_woman(raw.num_women, false);

  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto& kind = line.tokens[0];
    if (kind.text != "m" && kind.text != "w")
      throw SyntaxError(line.number, kind.column,
                        "expected 'm' or 'w', got '" + std::string(kind.text) + "'");
    const bool is_man = kind.text == "m";
    const auto& id_tok = token_at(line, 1, "id");
    const int id = parse_int(line, id_tok);
    const int limit = is_man ? raw.num_men : raw.num_women;
    if (id >= limit)
      throw SyntaxError(line.number, id_tok.column, "id " + std::to_string(id) + " out of range");
    auto& seen = is_man ? seen_man : seen_woman;
    if (seen[id])
      throw SyntaxError(line.number, id_tok.column,
                        std::string(is_man ? "man " : "woman ") + std::to_string(id) +
                            " already defined");
    seen[id] = true;
    expect(line, 2, ":");

    if (is_man) {
      for (std::size_t t = 3; t < line.tokens.size(); ++t)
        raw.men_prefs[id].push_back(parse_int(line, line.tokens[t]));
      continue;
    }

    auto& groups = raw.women_prefs[id];
    std::size_t t = 3;
    while (t < line.tokens.size()) {
      expect(line, t, "(");
      ++t;
      std::vector<Man> group;
      while (t < line.tokens.size() && line.tokens[t].text != ")") {
        if (line.tokens[t].text == "(")
          throw SyntaxError(line.number, line.tokens[t].column, "nested '('");
        group.push_back(parse_int(line, line.tokens[t]));
        ++t;
      }
      expect(line, t, ")");
      if (group.empty())
        throw SyntaxError(line.number, line.tokens[t].column, "empty tie-group");
      ++t;
      groups.push_back(std::move(group));
    }
  }

  for (int a = 0; a < raw.num_men; ++a)
    if (!seen_man[a])
      throw SyntaxError(lines.back().number + 1, 1, "missing line for man " + std::to_string(a));
  for (int b = 0; b < raw.num_women; ++b)
    if (!seen_woman[b])
      throw SyntaxError(lines.back().number + 1, 1,
                        "missing line for woman " + std::to_string(b));

  return validate(std::move(raw));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "men " << inst.num_men() << "\n";
  out << "women " << inst.num_women() << "\n";
  for (Man a = 0; a < inst.num_men(); ++a) {
    out << "m " << a << ":";
    for (const Woman b : inst.list(a)) out << " " << b;
    out << "\n";
  }
  for (Woman b = 0; b < inst.num_women(); ++b) {
    out << "w " << b << ":";
    for (const auto& group : inst.groups(b)) {
      out << " (";
      for (std::size_t i = 0; i < group.size(); ++i) out << (i ? " " : "") << group[i];
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

Instance generate_random(int num_men, int num_women, double edge_prob, double tie_prob,
                         std::uint64_t seed) {
  if (num_men < 0 || num_women < 0)
    throw Error(ErrorCode::InvalidArgument, "negative population size");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0) || !(tie_prob >= 0.0 && tie_prob <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "probabilities must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(edge_prob);
  std::bernoulli_distribution tie(tie_prob);

  RawInstance raw;
  raw.num_men = num_men;
  raw.num_women = num_women;
  raw.men_prefs.resize(num_men);
  raw.women_prefs.resize(num_women);

  std::vector<std::vector<Man>> women_adj(num_women);
  for (Man a = 0; a < num_men; ++a)
    for (Woman b = 0; b < num_women; ++b)
      if (edge(rng)) {
        raw.men_prefs[a].push_back(b);
        women_adj[b].push_back(a);
      }

  for (auto& list : raw.men_prefs) std::shuffle(list.begin(), list.end(), rng);

  for (Woman b = 0; b < num_women; ++b) {
    auto& order = women_adj[b];
    std::shuffle(order.begin(), order.end(), rng);
    auto& groups = raw.women_prefs[b];
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && tie(rng))
        groups.back().push_back(order[i]);
      else
        groups.push_back({order[i]});
    }
  }
  return validate(std::move(raw));
}

namespace {

RawInstance filtered(const Instance& inst, Man drop_man, Woman drop_woman, Man edge_man,
                     Woman edge_woman) {
  auto man_id = [&](Man a) { return drop_man != kNone && a > drop_man ? a - 1 : a; };
  auto woman_id = [&](Woman b) { return drop_woman != kNone && b > drop_woman ? b - 1 : b; };
  auto dropped = [&](Man a, Woman b) {
    return a == drop_man || b == drop_woman || (a == edge_man && b == edge_woman);
  };

  RawInstance raw;
  raw.num_men = inst.num_men() - (drop_man != kNone ? 1 : 0);
  raw.num_women = inst.num_women() - (drop_woman != kNone ? 1 : 0);
  for (Man a = 0; a < inst.num_men(); ++a) {
    if (a == drop_man) continue;
    std::vector<Woman> list;
    for (const Woman b : inst.list(a))
      if (!dropped(a, b)) list.push_back(woman_id(b));
    raw.men_prefs.push_back(std::move(list));
  }
  for (Woman b = 0; b < inst.num_women(); ++b) {
    if (b == drop_woman) continue;
    TieGroups groups;
    for (const auto& group : inst.groups(b)) {
      std::vector<Man> kept;
      for (const Man a : group)
        if (!dropped(a, b)) kept.push_back(man_id(a));
      if (!kept.empty()) groups.push_back(std::move(kept));
    }
    raw.women_prefs.push_back(std::move(groups));
  }
  return raw;
}

}  // namespace

Instance remove_man(const Instance& inst, Man a) {
  return validate(filtered(inst, a, kNone, kNone, kNone));
}

Instance remove_woman(const Instance& inst, Woman b) {
  return validate(filtered(inst, kNone, b, kNone, kNone));
}

Instance remove_edge(const Instance& inst, Man a, Woman b) {
  return validate(filtered(inst, kNone, kNone, a, b));
}

}  // namespace tiematch
