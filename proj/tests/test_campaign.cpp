#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "support.hpp"
#include "tiematch/campaign.hpp"
#include "tiematch/error.hpp"

using namespace tiematch;
using namespace testsupport;
namespace fs = std::filesystem;

TEST(Campaign, ZeroCount) {
  CampaignConfig cfg;
  cfg.count = 0;
  const CampaignReport rep = run_campaign(cfg);
  EXPECT_TRUE(rep.records.empty());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.max_ratio, Ratio(1, 1));
}

TEST(Campaign, ConfigValidation) {
  CampaignConfig cfg;
  cfg.n_min = 5;
  cfg.n_max = 4;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = CampaignConfig{};
  cfg.edge_probs = {1.5};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = CampaignConfig{};
  cfg.tie_probs.clear();
  EXPECT_THROW(cfg.validate(), Error);
  cfg = CampaignConfig{};
  cfg.count = -1;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Campaign, JobsCoverTheGrid) {
  CampaignConfig cfg;
  cfg.count = 9;
  std::set<std::pair<double, double>> cells;
  for (int i = 0; i < 9; ++i) {
    const CampaignJob j = campaign_job(cfg, i);
    EXPECT_GE(j.n, cfg.n_min);
    EXPECT_LE(j.n, cfg.n_max);
    EXPECT_EQ(j.schedule.policy(), i % 2 ? Schedule::Policy::Seeded : Schedule::Policy::Deterministic);
    cells.insert({j.edge_prob, j.tie_prob});
  }
  EXPECT_EQ(cells.size(), 9u);
  cfg.policy = CampaignConfig::PolicyMix::Seeded;
  EXPECT_EQ(campaign_job(cfg, 0).schedule.policy(), Schedule::Policy::Seeded);
}

TEST(Campaign, ReproducibleAcrossThreadCounts) {
  CampaignConfig cfg;
  cfg.count = 300;
  cfg.jobs = 1;
  const std::string one = run_campaign(cfg).to_tsv();
  cfg.jobs = 4;
  const std::string four = run_campaign(cfg).to_tsv();
  EXPECT_EQ(one, four);
  const auto first = one.substr(0, one.find('\n'));
  EXPECT_EQ(first,
            "index\tseed\tn\tedge_prob\ttie_prob\tpolicy\tedges\tm\topt\tratio\tt\tk\tell_sum\tsteps"
            "\tstable\tpassed\tfailed\tcomponents");
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 301);
}

TEST(Campaign, RecordsAgreeWithVerify) {
  CampaignConfig cfg;
  cfg.count = 200;
  const CampaignReport rep = run_campaign(cfg);
  ASSERT_EQ(rep.records.size(), 200u);
  Ratio worst(1, 1);
  for (const auto& r : rep.records) {
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.stable);
    EXPECT_LE(r.ratio, kThirteenNinths);
    if (worst < r.ratio) worst = r.ratio;
  }
  EXPECT_EQ(rep.max_ratio, worst);
}

TEST(Campaign, WritesOutputFiles) {
  const fs::path dir = fs::temp_directory_path() / "tiematch_campaign_test";
  fs::remove_all(dir);
  CampaignConfig cfg;
  cfg.count = 20;
  cfg.out_dir = dir.string();
  run_campaign(cfg);
  EXPECT_TRUE(fs::exists(dir / "records.tsv"));
  EXPECT_TRUE(fs::exists(dir / "summary.txt"));
  EXPECT_NE(read_text(dir / "summary.txt").find("instances = 20"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Campaign, MinimizeShrinksToCore) {
  const Instance inst = generate_random(6, 6, 0.8, 0.3, 17);
  const auto fails = [](const Instance& x) { return x.num_men() >= 1 && x.num_edges() >= 2; };
  ASSERT_TRUE(fails(inst));
  const Instance small = minimize_witness(inst, fails);
  EXPECT_TRUE(fails(small));
  EXPECT_EQ(small.num_edges(), 2);
  EXPECT_LE(small.num_men(), 2);
  EXPECT_LE(small.num_women(), 2);
}

TEST(Campaign, MinimizeKeepsNonFailingInput) {
  const Instance inst = generate_random(3, 3, 0.8, 0.3, 4);
  const Instance same = minimize_witness(inst, [](const Instance&) { return false; });
  EXPECT_EQ(same, inst);
}
