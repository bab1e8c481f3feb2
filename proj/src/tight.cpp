#include "tiematch/tight.hpp"

namespace tiematch {

Instance tight_instance() {
  RawInstance raw;
  raw.num_men = 13;
  raw.num_women = 13;
  raw.men_prefs = {
      {0},        {1, 0},     {1, 5, 2}, {3},        {4, 3},     {4, 5, 7},   {1, 5, 6},
      {7},        {4, 8, 7},  {11, 8, 9}, {10},      {11, 10},   {11, 8, 12},
  };
  raw.women_prefs = {
      {{1}, {0}},   {{1, 2, 6}},  {{2}},       {{4}, {3}},  {{4, 5, 8}},
      {{2, 5, 6}},  {{6}},        {{5, 8}, {7}}, {{8, 9, 12}}, {{9}},
      {{11}, {10}}, {{9, 11, 12}}, {{12}},
  };
  return validate(std::move(raw));
}

Schedule tight_schedule() {
  using E = ScriptEvent;
  std::vector<E> s = {
      // Three 4-cycles of basic men sharing tied women.
      E::propose(2, 1), E::propose(2, 2),
      E::propose(6, 1), E::reject(1, 6, 1),
      E::propose(6, 2), E::reject(1, 2, 1),
      E::propose(5, 1), E::propose(5, 2),
      E::propose(8, 1), E::reject(4, 8, 1),
      E::propose(8, 2), E::reject(4, 5, 1),
      E::propose(9, 1), E::propose(9, 2),
      E::propose(12, 1), E::reject(11, 12, 1),
      E::propose(12, 2), E::reject(11, 9, 1),
      E::propose(2, 1), E::propose(6, 1),
      E::propose(9, 1), E::propose(12, 1),
      E::propose(5, 1), E::reject(5, 5, 1),
      E::propose(8, 1), E::reject(8, 8, 1),
      E::propose(5, 1), E::propose(8, 1),
  };
  // Second-column men end with both proposals at their last woman.
  for (const auto& [a, first] : {std::pair{1, 1}, std::pair{4, 4}, std::pair{11, 11}}) {
    s.push_back(E::propose(a, 1));
    s.push_back(E::propose(a, 2));
    s.push_back(E::reject(first, a, 2));
    s.push_back(E::propose(a, 1));
    s.push_back(E::propose(a, 2));
  }
  // First-column men are rejected three times and retire.
  for (const Man a : {0, 3, 7, 10}) {
    s.push_back(E::propose(a, 1));
    s.push_back(E::propose(a, 2));
    s.push_back(E::propose(a, 1));
  }
  return Schedule::scripted(std::move(s));
}

std::vector<Edge> tight_accepted_edges() {
  return {{1, 0}, {2, 1}, {2, 5},  {4, 3},  {5, 4},   {5, 7},   {6, 1},  {6, 5},
          {8, 4}, {8, 7}, {9, 8},  {9, 11}, {11, 10}, {12, 8},  {12, 11}};
}

std::vector<Edge> tight_m_edges() {
  return {{1, 0}, {2, 1}, {4, 3}, {5, 4}, {6, 5}, {8, 7}, {9, 8}, {11, 10}, {12, 11}};
}

std::vector<Edge> tight_opt_edges() {
  std::vector<Edge> out;
  for (int i = 0; i < 13; ++i) out.emplace_back(i, i);
  return out;
}

}  // namespace tiematch
