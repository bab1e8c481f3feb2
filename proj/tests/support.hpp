#pragma once

// Reference implementations written straight from the definitions, kept
// independent of the library code they are compared against.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tiematch/instance.hpp"
#include "tiematch/matching.hpp"

namespace testsupport {

using tiematch::Instance;
using tiematch::kNone;

// partner[a] = woman or kNone.
using Assignment = std::vector<int>;

inline int group_of(const Instance& inst, int b, int a) {
  const auto& g = inst.groups(b);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::find(g[i].begin(), g[i].end(), a) != g[i].end()) return static_cast<int>(i);
  return -1;
}

inline int position_in(const std::vector<int>& list, int x) {
  auto it = std::find(list.begin(), list.end(), x);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

// (a, b) blocks when both strictly prefer each other to their partners.
inline std::vector<std::pair<int, int>> naive_blocking(const Instance& inst, const Assignment& wife) {
  std::vector<int> husband(inst.num_women(), kNone);
  for (int a = 0; a < inst.num_men(); ++a)
    if (wife[a] != kNone) husband[wife[a]] = a;
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < inst.num_men(); ++a) {
    const auto& list = inst.list(a);
    for (const int b : list) {
      if (wife[a] == b) continue;
      const bool man_wants = wife[a] == kNone || position_in(list, b) < position_in(list, wife[a]);
      const bool woman_wants =
          husband[b] == kNone || group_of(inst, b, a) < group_of(inst, b, husband[b]);
      if (man_wants && woman_wants) out.emplace_back(a, b);
    }
  }
  return out;
}

// Every matching of the instance, by plain recursion over men.
template <class F>
void for_each_matching(const Instance& inst, F&& visit) {
  Assignment wife(inst.num_men(), kNone);
  std::vector<bool> taken(inst.num_women(), false);
  auto rec = [&](auto&& self, int a) -> void {
    if (a == inst.num_men()) {
      visit(wife);
      return;
    }
    self(self, a + 1);
    for (const int b : inst.list(a)) {
      if (taken[b]) continue;
      taken[b] = true;
      wife[a] = b;
      self(self, a + 1);
      wife[a] = kNone;
      taken[b] = false;
    }
  };
  rec(rec, 0);
}

inline int enumerate_max_stable(const Instance& inst) {
  int best = -1;
  for_each_matching(inst, [&](const Assignment& w) {
    if (!naive_blocking(inst, w).empty()) return;
    const int size = static_cast<int>(std::count_if(w.begin(), w.end(), [](int b) { return b != kNone; }));
    best = std::max(best, size);
  });
  return best;
}

// Maximum matching size of an edge list by exhaustive search over edges.
inline int brute_max_matching(const std::vector<std::pair<int, int>>& edges, int num_men,
                              int num_women) {
  std::vector<bool> man_used(num_men, false), woman_used(num_women, false);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    if (i == edges.size()) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    self(self, i + 1, size);
    const auto [a, b] = edges[i];
    if (!man_used[a] && !woman_used[b]) {
      man_used[a] = woman_used[b] = true;
      self(self, i + 1, size + 1);
      man_used[a] = woman_used[b] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

inline Assignment assignment_of(const tiematch::Matching& m) {
  Assignment w(m.num_men(), kNone);
  for (int a = 0; a < m.num_men(); ++a) w[a] = m.of_man(a);
  return w;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string source_path(const std::string& rel) {
  return std::string(TIEMATCH_SOURCE_DIR) + "/" + rel;
}

}  // namespace testsupport
