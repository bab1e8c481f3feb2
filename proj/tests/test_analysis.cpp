#include <gtest/gtest.h>

#include "tiematch/analysis.hpp"
#include "tiematch/error.hpp"
#include "tiematch/tight.hpp"

using namespace tiematch;

namespace {

Pipeline tight() { return build_pipeline(tight_instance(), tight_schedule(), kTightOracleBound); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Popularity, DefinitionClauses) {
  const Instance inst = parse_instance("men 3\nwomen 1\nm 0: 0\nm 1: 0\nm 2: 0\nw 0: (0 1) (2)\n");
  // c strictly worse than a: never a-good.
  EXPECT_FALSE(is_a_good(inst, 0, 2, 0, Tier::Promoted2, true));
  // c strictly better than a: always a-good.
  EXPECT_TRUE(is_a_good(inst, 0, 0, 2, Tier::Basic, false));
  // Tied: needs promotion or an earlier rejection.
  EXPECT_FALSE(is_a_good(inst, 0, 1, 0, Tier::Basic, false));
  EXPECT_TRUE(is_a_good(inst, 0, 1, 0, Tier::Promoted1, false));
  EXPECT_TRUE(is_a_good(inst, 0, 1, 0, Tier::Retired, false));
  EXPECT_TRUE(is_a_good(inst, 0, 1, 0, Tier::Basic, true));
  // A basic man's own proposal is not good against himself.
  EXPECT_FALSE(is_a_good(inst, 0, 0, 0, Tier::Basic, false));
  EXPECT_EQ(code_of([&] {
              const Instance other = parse_instance("men 2\nwomen 1\nm 0: 0\nm 1:\nw 0: (0)\n");
              is_a_good(other, 0, 0, 1, Tier::Basic, false);
            }),
            ErrorCode::PreconditionViolated);
}

TEST(Popularity, OneHeldProposalIsNeverPopular) {
  const Instance inst = parse_instance("men 2\nwomen 2\nm 0: 0 1\nm 1: 1\nw 0: (0)\nw 1: (0 1)\n");
  const RunResult r = run(inst, Schedule::deterministic());
  const Popularity pop(inst, r.final_state);
  for (Woman b = 0; b < 2; ++b)
    if (r.final_state.held[b].size() < 2)
      for (const Man a : inst.neighbors(b)) EXPECT_FALSE(pop.is_popular(b, a));
}

TEST(Popularity, ReplayAgreesOnRandomRuns) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + seed % 7;
    const Instance inst = generate_random(n, n, 0.6, 0.8, seed);
    EXPECT_FALSE(check_popularity_over_time(inst, run(inst, Schedule::seeded(seed))));
  }
}

TEST(Jumps, MjumpLandsOnMatchedWoman) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const int n = 2 + seed % 7;
    const Pipeline p = build_pipeline(generate_random(n, n + 1, 0.5, 0.7, seed), Schedule::seeded(seed));
    const Jumps j(p);
    for (Woman b = 0; b < p.inst.num_women(); ++b) {
      if (!j.in_domain(b)) {
        if (p.m.of_woman(b) != kNone) {
          EXPECT_EQ(code_of([&] { j.mjump(b); }), ErrorCode::PreconditionViolated);
        }
        continue;
      }
      const Woman c = j.mjump(b);
      EXPECT_NE(c, b);
      EXPECT_NE(p.m.of_woman(c), kNone);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Jumps, TightValues) {
  const Pipeline p = tight();
  const Jumps j(p);
  // Unmatched women: b2, b6, b9, b12 (the augmenting path ends).
  for (const Woman b : {2, 6, 9, 12}) EXPECT_EQ(p.m.of_woman(b), kNone);
  // b2, b6, b9, b12 are isolated in G'.
  for (const Woman b : {2, 6, 9, 12}) EXPECT_FALSE(j.in_domain(b));
  // The critical arc x{a8,b7} -> b4 jumps to b4 from either end.
  EXPECT_EQ(j.pathjump(p.h.node_of_man(8)), 4);
  EXPECT_EQ(j.pathjump(p.h.node_of_woman(4)), 4);
  // y{a2,b1} and y{a6,b5} point at each other: no blue woman is reachable.
  EXPECT_EQ(code_of([&] { j.pathjump(p.h.node_of_man(2)); }), ErrorCode::Undefined);
  EXPECT_EQ(code_of([&] { j.pathjump(p.h.node_of_man(6)); }), ErrorCode::Undefined);
  // A blue man off every critical arc is outside the domain.
  EXPECT_EQ(code_of([&] { j.pathjump(p.h.node_of_man(5)); }), ErrorCode::PreconditionViolated);
}

TEST(Charging, TightLedger) {
  const Pipeline p = tight();
  const ChargeLedger l = run_charging(p);
  EXPECT_EQ(l.t, 3);
  // Stage 1: the three 5-path y-node men.
  const auto& s1 = l.stages[0];
  EXPECT_EQ(s1.men[2] + s1.men[9] + s1.men[12], 3);
  // Stage 2: a2 -> b5, a9 -> b8, a12 -> b8.
  const auto& s2 = l.stages[1];
  EXPECT_EQ(s2.unpopularity[5], 1);
  EXPECT_EQ(s2.unpopularity[8], 2);
  EXPECT_EQ(s2.total(), 3);
  EXPECT_EQ(l.stages[2].unpopularity, s2.unpopularity);
  // Stage 4: b8 = OPT partner of a8, whose arc is critical, passes 2 to b4.
  const auto& s4 = l.stages[3];
  EXPECT_EQ(s4.unpopularity[8], 0);
  EXPECT_EQ(s4.path[4], 2);
  EXPECT_EQ(l.received_stage4[4], 2);
  // Stage 5: b4 is matched, nothing moves.
  const auto& fin = l.final_state();
  EXPECT_EQ(fin.unpopularity[5], 1);
  EXPECT_EQ(fin.path[4], 2);
  EXPECT_EQ(fin.total(), 3);
  for (Woman b = 0; b < 13; ++b) EXPECT_LE(fin.woman_total(b), 3);
}

TEST(Charging, NoFivePathsGiveZeroLedger) {
  const Instance inst = generate_random(4, 4, 1.0, 0.0, 2);
  const Pipeline p = build_pipeline(inst, Schedule::deterministic());
  ASSERT_EQ(p.diff.t, 0);
  const ChargeLedger l = run_charging(p);
  for (const auto& s : l.stages) EXPECT_EQ(s.total(), 0);
}

TEST(Charging, ConservedOnRandomRuns) {
  int charged = 0;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const int n = 4 + seed % 6;
    const Pipeline p = build_pipeline(generate_random(n, n, 0.3, 0.9, seed), Schedule::seeded(seed));
    const ChargeLedger l = run_charging(p);
    for (const auto& s : l.stages) EXPECT_EQ(s.total(), p.diff.t);
    charged += p.diff.t;
  }
  EXPECT_GT(charged, 0);
}
