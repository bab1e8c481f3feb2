#pragma once

#include <string>
#include <vector>

#include "tiematch/accepted_graph.hpp"
#include "tiematch/instance.hpp"
#include "tiematch/matching.hpp"

namespace tiematch {

enum class ComponentKind { AugmentingPath, AlternatingPathEven, AlternatingPathOdd, Cycle };

std::string to_string(ComponentKind kind);

struct DiffComponent {
  ComponentKind kind = ComponentKind::Cycle;
  // Augmenting paths run alpha_0, beta_0, alpha_1, ..., alpha_k, beta_k with
  // alpha_0 and beta_k unmatched by M, so (alpha_i, beta_i) are OPT edges
  // and (beta_i, alpha_{i+1}) are M edges.
  std::vector<Vertex> nodes;
  int num_edges = 0;
  int m_edges = 0;
  int opt_edges = 0;
  // Augmenting: 2l+5 edges. Cycle / even path: 2l. Odd path: 2l-1.
  int ell = 0;

  // Men and women of an augmenting path by index (alpha_i, beta_i).
  Man alpha(int i) const { return nodes[2 * i].id; }
  Woman beta(int i) const { return nodes[2 * i + 1].id; }
  // k for an augmenting path: the number of M edges it contains.
  int k() const { return m_edges; }
};

// Components of M xor OPT, plus the edges M and OPT share. A shared edge
// is a two-edge cycle of the multigraph M + OPT and contributes 1 to
// ell_sum, so that every person of the instance lies in some counted part.
struct DiffDecomposition {
  std::vector<DiffComponent> components;
  std::vector<Edge> shared;
  int t = 0;        // augmenting paths with exactly 5 edges
  int k = 0;        // augmenting paths with at least 7 edges
  int ell_sum = 0;  // sum of ell over components and shared edges

  int augmenting_paths() const;
  // Index into `components` of the component containing v, or kNone.
  int component_of(Vertex v) const;
};

DiffDecomposition decompose(const Instance& inst, const Matching& m, const Matching& opt);

}  // namespace tiematch
