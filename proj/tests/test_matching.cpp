#include <gtest/gtest.h>

#include "support.hpp"
#include "tiematch/engine.hpp"
#include "tiematch/error.hpp"
#include "tiematch/matching.hpp"

using namespace tiematch;

TEST(AcceptedGraph, ComponentsOfPathsAndCycles) {
  // Path a0-b0-a1 and 4-cycle a2-b1-a3-b2.
  const AcceptedGraph g(4, 3, {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 1}});
  EXPECT_EQ(g.edges().size(), 6u);
  const auto comps = g.components();
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_FALSE(comps[0].is_cycle);
  EXPECT_EQ(comps[0].nodes, (std::vector<Vertex>{Vertex::man(0), Vertex::woman(0), Vertex::man(1)}));
  EXPECT_TRUE(comps[1].is_cycle);
  EXPECT_EQ(comps[1].nodes.front(), Vertex::man(2));
  EXPECT_EQ(comps[1].nodes[1], Vertex::woman(1));
  EXPECT_EQ(comps[1].num_edges(), 4);
}

TEST(AcceptedGraph, DegreeAboveTwoIsReported) {
  const AcceptedGraph g(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  EXPECT_THROW(g.components(), Error);
}

TEST(Matching, ExtractCoversDegreeTwoAndIsMaximum) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Instance inst = generate_random(2 + seed % 7, 2 + seed % 7, 0.6, 0.6, seed);
    for (const Schedule& sched : {Schedule::deterministic(), Schedule::seeded(seed)}) {
      const RunResult r = run(inst, sched);
      const Matching m = extract_matching(r.graph, sched);
      for (const auto& [a, b] : m.pairs()) EXPECT_TRUE(r.graph.has_edge(a, b));
      for (Man a = 0; a < inst.num_men(); ++a)
        if (r.graph.degree(Vertex::man(a)) == 2) EXPECT_NE(m.of_man(a), kNone);
      for (Woman b = 0; b < inst.num_women(); ++b)
        if (r.graph.degree(Vertex::woman(b)) == 2) EXPECT_NE(m.of_woman(b), kNone);
      EXPECT_EQ(m.size(), testsupport::brute_max_matching(r.graph.edges(), inst.num_men(),
                                                          inst.num_women()));
    }
  }
}

TEST(Matching, EvenPathDropsLowerEndpointDeterministically) {
  // a0 - b0 - a1: the lower endpoint a0 is left unmatched.
  const AcceptedGraph g(2, 1, {{0, 0}, {1, 0}});
  const Matching m = extract_matching(g, Schedule::deterministic());
  EXPECT_EQ(m.of_man(0), kNone);
  EXPECT_EQ(m.of_man(1), 0);
}

TEST(Matching, BlockingPairsMatchTheDefinition) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = generate_random(4, 4, 0.7, 0.5, seed);
    testsupport::for_each_matching(inst, [&](const testsupport::Assignment& w) {
      Matching m(inst.num_men(), inst.num_women());
      for (Man a = 0; a < inst.num_men(); ++a)
        if (w[a] != kNone) m.add(a, w[a]);
      const auto expected = testsupport::naive_blocking(inst, w);
      auto got = find_blocking_pairs(inst, m);
      std::vector<std::pair<int, int>> got_pairs(got.begin(), got.end());
      ASSERT_EQ(got_pairs, expected);
    });
  }
}

TEST(Matching, EngineOutputIsStable) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance inst = generate_random(2 + seed % 7, 2 + seed % 7, 0.5, 0.7, seed);
    for (const Schedule& sched : {Schedule::deterministic(), Schedule::seeded(seed)}) {
      const Matching m = extract_matching(run(inst, sched).graph, sched);
      EXPECT_TRUE(testsupport::naive_blocking(inst, testsupport::assignment_of(m)).empty());
    }
  }
}

TEST(Matching, TextFormat) {
  const Instance inst = parse_instance("men 2\nwomen 2\nm 0: 0 1\nm 1: 0\nw 0: (0 1)\nw 1: (0)\n");
  const Matching m = parse_matching(inst, "a 0 1\na 1 -\n");
  EXPECT_EQ(m.of_man(0), 1);
  EXPECT_EQ(m.of_man(1), kNone);
  EXPECT_EQ(serialize_matching(m), "a 0 1\na 1 -\n");
  EXPECT_EQ(parse_matching(inst, serialize_matching(m)), m);
  EXPECT_THROW(parse_matching(inst, "a 1 1\n"), Error);            // not an edge
  EXPECT_THROW(parse_matching(inst, "a 0 0\na 1 0\n"), Error);     // woman used twice
  EXPECT_THROW(parse_matching(inst, "a 0 x\n"), SyntaxError);
}

TEST(Matching, AddRejectsReuse) {
  Matching m(2, 2);
  m.add(0, 0);
  EXPECT_THROW(m.add(0, 1), Error);
  EXPECT_THROW(m.add(1, 0), Error);
  EXPECT_EQ(m.size(), 1);
}
