#include "tiematch/decompose.hpp"

#include <algorithm>

namespace tiematch {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::AugmentingPath: return "augmenting";
    case ComponentKind::AlternatingPathEven: return "even-path";
    case ComponentKind::AlternatingPathOdd: return "odd-path";
    case ComponentKind::Cycle: return "cycle";
  }
  return "unknown";
}

int DiffDecomposition::augmenting_paths() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const auto& c) {
    return c.kind == ComponentKind::AugmentingPath;
  }));
}

int DiffDecomposition::component_of(Vertex v) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const Vertex u : components[i].nodes)
      if (u == v) return static_cast<int>(i);
  return kNone;
}

DiffDecomposition decompose(const Instance& inst, const Matching& m, const Matching& opt) {
  DiffDecomposition out;
  std::vector<Edge> edges;
  for (const auto& [a, b] : m.pairs()) {
    if (opt.contains(a, b))
      out.shared.emplace_back(a, b);
    else
      edges.emplace_back(a, b);
  }
  for (const auto& [a, b] : opt.pairs())
    if (!m.contains(a, b)) edges.emplace_back(a, b);

  // Each node has at most one M edge and one OPT edge in the difference.
  const AcceptedGraph diff(inst.num_men(), inst.num_women(), edges);
  auto in_diff_m = [&](Vertex u, Vertex v) {
    const Man a = u.is_man() ? u.id : v.id;
    const Woman b = u.is_man() ? v.id : u.id;
    return m.contains(a, b) && !opt.contains(a, b);
  };

  for (auto comp : diff.components()) {
    DiffComponent c;
    c.num_edges = comp.num_edges();
    const int n = static_cast<int>(comp.nodes.size());
    for (int i = 0; i < c.num_edges; ++i)
      (in_diff_m(comp.nodes[i], comp.nodes[(i + 1) % n]) ? c.m_edges : c.opt_edges)++;

    if (comp.is_cycle) {
      c.kind = ComponentKind::Cycle;
      c.ell = c.num_edges / 2;
    } else if (c.num_edges % 2 == 0) {
      c.kind = ComponentKind::AlternatingPathEven;
      c.ell = c.num_edges / 2;
    } else if (c.opt_edges > c.m_edges) {
      c.kind = ComponentKind::AugmentingPath;
      c.ell = (c.num_edges - 5) / 2;
      if (comp.nodes.front().is_woman()) std::reverse(comp.nodes.begin(), comp.nodes.end());
      if (c.num_edges == 5) ++out.t;
      if (c.num_edges >= 7) ++out.k;
    } else {
      c.kind = ComponentKind::AlternatingPathOdd;
      c.ell = (c.num_edges + 1) / 2;
    }
    c.nodes = std::move(comp.nodes);
    out.ell_sum += c.ell;
    out.components.push_back(std::move(c));
  }
  out.ell_sum += static_cast<int>(out.shared.size());
  return out;
}

}  // namespace tiematch
