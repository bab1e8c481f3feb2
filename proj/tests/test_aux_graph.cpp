#include <gtest/gtest.h>

#include <set>

#include "tiematch/analysis.hpp"
#include "tiematch/error.hpp"
#include "tiematch/tight.hpp"

using namespace tiematch;

namespace {

Pipeline tight() { return build_pipeline(tight_instance(), tight_schedule(), kTightOracleBound); }

std::vector<std::string> labels(const AuxGraph& h, const std::vector<int>& nodes) {
  std::vector<std::string> out;
  for (const int n : nodes) out.push_back(h.node(n).label());
  return out;
}

}  // namespace

TEST(AuxGraph, TightContractions) {
  const Pipeline p = tight();
  EXPECT_EQ(p.h.count(AuxNode::Kind::X), 4);
  EXPECT_EQ(p.h.count(AuxNode::Kind::Y), 4);
  std::set<std::string> x, y;
  for (const auto& n : p.h.nodes()) {
    if (n.kind == AuxNode::Kind::X) x.insert(n.label());
    if (n.kind == AuxNode::Kind::Y) y.insert(n.label());
  }
  EXPECT_EQ(x, (std::set<std::string>{"x{a1,b0}", "x{a4,b3}", "x{a8,b7}", "x{a11,b10}"}));
  EXPECT_EQ(y, (std::set<std::string>{"y{a2,b1}", "y{a6,b5}", "y{a9,b8}", "y{a12,b11}"}));
  // 26 people, 8 contracted pairs.
  EXPECT_EQ(p.h.nodes().size(), 18u);
  // 15 accepted edges minus the 8 contracted M edges.
  EXPECT_EQ(p.h.arcs().size(), 7u);
}

TEST(AuxGraph, TightCriticalArcsAndGoodPaths) {
  const Pipeline p = tight();
  ASSERT_EQ(p.critical.size(), 1u);
  EXPECT_EQ(p.critical[0].man, 8);
  EXPECT_EQ(p.critical[0].woman, 4);
  ASSERT_EQ(p.good.size(), 1u);
  EXPECT_EQ(labels(p.h, p.good[0].nodes), (std::vector<std::string>{"a5", "x{a8,b7}", "b4"}));
  const HStructure s = analyze_structure(p.inst, p.h, p.opt, p.tiers());
  EXPECT_EQ(s.path_of_critical, (std::vector<int>{0}));
}

TEST(AuxGraph, NoAugmentingPathsMeansAllBlue) {
  const Instance inst = parse_instance("men 2\nwomen 2\nm 0: 0 1\nm 1: 1 0\nw 0: (0 1)\nw 1: (0 1)\n");
  const Pipeline p = build_pipeline(inst, Schedule::deterministic());
  EXPECT_EQ(p.diff.augmenting_paths(), 0);
  EXPECT_EQ(p.h.count(AuxNode::Kind::X), 0);
  EXPECT_EQ(p.h.count(AuxNode::Kind::Y), 0);
  EXPECT_EQ(p.h.arcs().size(), p.run.graph.edges().size());
  for (const auto& arc : p.h.arcs()) {
    EXPECT_EQ(p.h.node(arc.from).man, arc.man);
    EXPECT_EQ(p.h.node(arc.to).woman, arc.woman);
  }
}

// Critical arcs by the four bullets, checked against every arc of H.
TEST(AuxGraph, CriticalArcsMatchDefinition) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const int n = 3 + seed % 6;
    const Instance inst = generate_random(n, n, 0.4, 0.8, seed);
    const Pipeline p = build_pipeline(inst, Schedule::seeded(seed));
    std::set<int> expected;
    for (std::size_t i = 0; i < p.h.arcs().size(); ++i) {
      const AuxArc& arc = p.h.arcs()[i];
      const Woman o = p.opt.of_man(arc.man);
      const bool at_least_opt = o == kNone || !inst.man_prefers(arc.man, o, arc.woman);
      if (at_least_opt && !is_two_promoted(p.tiers()[arc.man]) && !p.m.contains(arc.man, arc.woman) &&
          !p.h.man_in(arc.man, AuxNode::Kind::Y))
        expected.insert(static_cast<int>(i));
    }
    std::set<int> got;
    for (const auto& c : p.critical) got.insert(c.arc);
    EXPECT_EQ(got, expected) << serialize_instance(inst);
    seen += static_cast<int>(got.size());
    EXPECT_FALSE(check_no_y_to_x_arc(p.h));
    EXPECT_FALSE(check_critical_arc_endpoints(p.h, p.critical));
    EXPECT_FALSE(check_good_paths_disjoint(p.good));
  }
  EXPECT_GT(seen, 0);
}

TEST(AuxGraph, GoodPathsUseNoMArcAndRunBlueManToBlueWoman) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const int n = 3 + seed % 6;
    const Pipeline p = build_pipeline(generate_random(n, n, 0.4, 0.8, seed), Schedule::seeded(seed));
    for (const auto& g : p.good) {
      EXPECT_TRUE(p.h.node(g.nodes.front()).is_blue_man());
      EXPECT_TRUE(p.h.node(g.nodes.back()).is_blue_woman());
      ASSERT_EQ(g.arcs.size() + 1, g.nodes.size());
      for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        const AuxArc& arc = p.h.arcs()[g.arcs[i]];
        EXPECT_FALSE(arc.in_m);
        EXPECT_EQ(arc.from, g.nodes[i]);
        EXPECT_EQ(arc.to, g.nodes[i + 1]);
      }
    }
  }
}

TEST(AuxGraph, StructureChecksReportWitnesses) {
  // Two good paths sharing a node.
  const std::vector<GoodPath> overlapping = {{{0, 1}, {0}}, {{2, 1}, {1}}};
  EXPECT_TRUE(check_good_paths_disjoint(overlapping));
  const std::vector<CriticalArc> two = {{0, 0, 0}, {1, 1, 1}};
  const std::vector<GoodPath> both = {{{0, 1, 2}, {0, 1}}};
  EXPECT_TRUE(check_good_path_single_critical_arc(two, both));
  EXPECT_TRUE(check_critical_arc_on_good_path({{5, 0, 0}}, both));
}

TEST(AuxGraph, DotExport) {
  const Pipeline p = tight();
  const std::string dot = to_dot(p.h, p.critical, p.good);
  EXPECT_NE(dot.find("digraph H"), std::string::npos);
  EXPECT_NE(dot.find("cluster_good0"), std::string::npos);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(dot.find("x{a8,b7}"), std::string::npos);
}
