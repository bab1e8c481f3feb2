#include "tiematch/schedule.hpp"

#include <sstream>

#include "text_lines.hpp"

namespace tiematch {

std::string Schedule::describe() const {
  switch (policy_) {
    case Policy::Deterministic: return "deterministic";
    case Policy::Seeded: return "seeded:" + std::to_string(seed_);
    case Policy::Scripted: return "scripted:" + std::to_string(script_.size());
  }
  return "unknown";
}

Schedule parse_schedule(std::string_view text) {
  using detail::parse_int;
  using detail::token_at;

  std::vector<ScriptEvent> events;
  for (const auto& line : detail::tokenize(text)) {
    const auto& kind = line.tokens[0];
    auto proposal_index = [&](std::size_t index) {
      const auto& tok = token_at(line, index, "proposal index");
      const int p = parse_int(line, tok);
      if (p != 1 && p != 2) throw SyntaxError(line.number, tok.column, "proposal index must be 1 or 2");
      return p;
    };
    std::size_t expected = 0;
    if (kind.text == "propose") {
      const int man = parse_int(line, token_at(line, 1, "man"));
      events.push_back(ScriptEvent::propose(man, proposal_index(2)));
      expected = 3;
    } else if (kind.text == "reject-tiebreak") {
      const int woman = parse_int(line, token_at(line, 1, "woman"));
      const int man = parse_int(line, token_at(line, 2, "man"));
      events.push_back(ScriptEvent::reject(woman, man, proposal_index(3)));
      expected = 4;
    } else {
      throw SyntaxError(line.number, kind.column,
                        "expected 'propose' or 'reject-tiebreak', got '" + std::string(kind.text) +
                            "'");
    }
    if (line.tokens.size() > expected)
      throw SyntaxError(line.number, line.tokens[expected].column, "trailing tokens");
  }
  return Schedule::scripted(std::move(events));
}

std::string serialize_schedule(const Schedule& sched) {
  std::ostringstream out;
  for (const auto& ev : sched.script()) {
    if (ev.kind == ScriptEvent::Kind::Propose)
      out << "propose " << ev.man << " " << ev.proposal << "\n";
    else
      out << "reject-tiebreak " << ev.woman << " " << ev.man << " " << ev.proposal << "\n";
  }
  return out.str();
}

}  // namespace tiematch
