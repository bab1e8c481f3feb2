#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tiematch/tight.hpp"
#include "tiematch/verify.hpp"

using namespace tiematch;
using namespace testsupport;

TEST(Verify, LemmaIdsAreUniqueAndReported) {
  const auto& ids = lemma_ids();
  EXPECT_EQ(ids.size(), 42u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  const VerificationReport rep =
      verify_all(parse_instance("men 1\nwomen 1\nm 0: 0\nw 0: (0)\n"), Schedule::deterministic());
  ASSERT_EQ(rep.lemmas.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(rep.lemmas[i].id, ids[i]);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_EQ(rep.ratio, Ratio(1, 1));
}

TEST(Verify, EmptyInstance) {
  const VerificationReport rep = verify_all(parse_instance("men 0\nwomen 0\n"), Schedule::deterministic());
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_EQ(rep.m_size, 0);
  EXPECT_EQ(rep.ratio, Ratio(1, 1));
}

TEST(Verify, TightInstanceReachesThirteenNinths) {
  const VerificationReport rep = verify_all(tight_instance(), tight_schedule(), kTightOracleBound);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_EQ(rep.m_size, 9);
  EXPECT_EQ(rep.opt_size, 13);
  EXPECT_EQ(rep.ratio, kThirteenNinths);
  EXPECT_EQ(rep.t, 3);
  EXPECT_EQ(rep.k, 1);
  EXPECT_EQ(rep.ell_sum, 1);
  EXPECT_EQ(rep.steps, 44);
  EXPECT_EQ(rep.to_text(), read_text(source_path("tests/golden/tight.report")));
}

TEST(Verify, TightScheduleIsNeeded) {
  const VerificationReport rep = verify_all(tight_instance(), Schedule::deterministic(), kTightOracleBound);
  EXPECT_TRUE(rep.passed()) << rep.to_text();
  EXPECT_LE(rep.ratio, kThirteenNinths);
}

TEST(Verify, TightEdgeSets) {
  const Pipeline p = build_pipeline(tight_instance(), tight_schedule(), kTightOracleBound);
  EXPECT_EQ(p.run.graph.edges(), tight_accepted_edges());
  EXPECT_EQ(p.m.pairs(), tight_m_edges());
  EXPECT_EQ(p.opt.pairs(), tight_opt_edges());
}

TEST(Verify, UnstableOptIsReported) {
  const Instance inst = parse_instance("men 2\nwomen 2\nm 0: 0 1\nm 1: 0\nw 0: (0) (1)\nw 1: (0)\n");
  Matching bad(2, 2);
  bad.add(0, 1);
  bad.add(1, 0);
  const VerificationReport rep = verify_pipeline(build_pipeline(inst, Schedule::deterministic(), bad));
  ASSERT_NE(rep.find("opt_stable"), nullptr);
  EXPECT_FALSE(rep.find("opt_stable")->passed);
  EXPECT_FALSE(rep.find("opt_stable")->witness.empty());
  EXPECT_FALSE(rep.passed());
  // Downstream statements lean on OPT being stable, so more may fail.
  ASSERT_FALSE(rep.failed_ids().empty());
  EXPECT_EQ(rep.failed_ids().front(), "opt_stable");
  EXPECT_NE(rep.to_text().find("LEMMA opt_stable FAIL"), std::string::npos);
}

TEST(Verify, AllStatementsHoldOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const int men = 2 + seed % 7;
    const int women = 2 + (seed / 7) % 7;
    const double edge = 0.2 + 0.1 * static_cast<double>(seed % 8);
    const double tie = 0.15 * static_cast<double>(seed % 7);
    const Instance inst = generate_random(men, women, edge, tie, seed);
    const Schedule sched = seed % 2 ? Schedule::seeded(seed) : Schedule::deterministic();
    const VerificationReport rep = verify_all(inst, sched);
    ASSERT_TRUE(rep.passed()) << serialize_instance(inst) << rep.to_text();
    EXPECT_LE(rep.ratio, kThirteenNinths);
    // 2 |M| >= |OPT| would already follow from maximality.
    EXPECT_LE(rep.opt_size, 2 * rep.m_size);
  }
}

TEST(Verify, ReportTextIsStable) {
  const Instance inst = generate_random(6, 6, 0.5, 0.5, 99);
  const std::string a = verify_all(inst, Schedule::seeded(3)).to_text();
  const std::string b = verify_all(inst, Schedule::seeded(3)).to_text();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("# ratio = "), std::string::npos);
}
