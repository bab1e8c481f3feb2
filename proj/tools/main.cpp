#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tiematch/analysis.hpp"
#include "tiematch/campaign.hpp"
#include "tiematch/error.hpp"
#include "tiematch/tight.hpp"
#include "tiematch/verify.hpp"

namespace tmx = tiematch;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct ScheduleFlags {
  std::optional<std::uint64_t> seed;
  std::string schedule_file;

  void add(CLI::App* cmd) {
    auto* s = cmd->add_option("--seed", seed, "Draw every open choice from this seed");
    cmd->add_option("--schedule", schedule_file, "Scripted proposal order")
        ->check(CLI::ExistingFile)
        ->excludes(s);
  }
  tmx::Schedule get() const {
    if (seed) return tmx::Schedule::seeded(*seed);
    if (!schedule_file.empty()) return tmx::parse_schedule(read_file(schedule_file));
    return tmx::Schedule::deterministic();
  }
};

int exit_code_for(tmx::ErrorCode code) {
  switch (code) {
    case tmx::ErrorCode::SyntaxError:
    case tmx::ErrorCode::AsymmetricAdjacency:
    case tmx::ErrorCode::DuplicateEntry:
    case tmx::ErrorCode::IdOutOfRange:
    case tmx::ErrorCode::InvalidArgument:
    case tmx::ErrorCode::InstanceTooLarge:
    case tmx::ErrorCode::ScriptViolation:
      return kUsage;
    default:
      return kFailed;
  }
}

void print_run(std::ostream& out, const tmx::Matching& m, long steps) {
  out << tmx::serialize_matching(m) << "# |M| = " << m.size() << "\n# steps = " << steps << '\n';
}

int cmd_run(const std::string& inst_file, const ScheduleFlags& flags, bool trace) {
  const tmx::Instance inst = tmx::parse_instance(read_file(inst_file));
  const tmx::Schedule sched = flags.get();
  const tmx::RunResult r = tmx::run(inst, sched);
  const tmx::Matching m = tmx::extract_matching(r.graph, sched);
  if (trace) std::cerr << tmx::format_trace(r.events);
  print_run(std::cout, m, r.steps);
  return kOk;
}

int cmd_verify(const std::string& inst_file, const std::string& matching_file) {
  const tmx::Instance inst = tmx::parse_instance(read_file(inst_file));
  const tmx::Matching m = tmx::parse_matching(inst, read_file(matching_file));
  const auto blocking = tmx::find_blocking_pairs(inst, m);
  for (const auto& [a, b] : blocking) std::cout << "blocking " << a << ' ' << b << '\n';
  std::cout << (blocking.empty() ? "STABLE" : "UNSTABLE") << '\n';
  return blocking.empty() ? kOk : kFailed;
}

int cmd_oracle(const std::string& inst_file, int bound) {
  const tmx::Instance inst = tmx::parse_instance(read_file(inst_file));
  const tmx::Matching opt = tmx::opt_oracle(inst, bound);
  std::cout << tmx::serialize_matching(opt) << "# |OPT| = " << opt.size() << '\n';
  return kOk;
}

int report_pipeline(const tmx::Pipeline& p, const std::string& dot_file) {
  const tmx::VerificationReport rep = tmx::verify_pipeline(p);
  std::cout << rep.to_text();
  if (!dot_file.empty()) write_file(dot_file, tmx::to_dot(p.h, p.critical, p.good));
  return rep.passed() ? kOk : kFailed;
}

int cmd_analyze(const std::string& inst_file, const ScheduleFlags& flags, int bound,
                const std::string& dot_file) {
  const tmx::Instance inst = tmx::parse_instance(read_file(inst_file));
  return report_pipeline(tmx::build_pipeline(inst, flags.get(), bound), dot_file);
}

std::vector<tmx::Edge> sorted(std::vector<tmx::Edge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

int cmd_tight(const std::string& out_dir, const std::string& dot_file, bool trace) {
  const tmx::Instance inst = tmx::tight_instance();
  const tmx::Schedule sched = tmx::tight_schedule();
  const tmx::Pipeline p = tmx::build_pipeline(inst, sched, tmx::kTightOracleBound);
  if (trace) std::cerr << tmx::format_trace(p.run.events);

  std::cout << "# M\n";
  print_run(std::cout, p.m, p.run.steps);
  std::cout << "# OPT\n" << tmx::serialize_matching(p.opt) << "# |OPT| = " << p.opt.size() << '\n';
  const int rc = report_pipeline(p, dot_file);

  bool ok = rc == kOk;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) {
      std::cout << "MISMATCH " << what << '\n';
      ok = false;
    }
  };
  expect(p.m.size() == 9, "|M| != 9");
  expect(p.opt.size() == 13, "|OPT| != 13");
  expect(sorted(p.run.graph.edges()) == tmx::tight_accepted_edges(), "accepted graph");
  expect(sorted(p.m.pairs()) == tmx::tight_m_edges(), "M edges");
  expect(sorted(p.opt.pairs()) == tmx::tight_opt_edges(), "OPT edges");
  const tmx::Ratio ratio(p.opt.size(), p.m.size());
  expect(ratio == tmx::kThirteenNinths, "ratio " + ratio.str());
  std::cout << "ratio = " << ratio.str() << " (exact)\n";

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/tight.inst", tmx::serialize_instance(inst));
    write_file(out_dir + "/tight.sched", tmx::serialize_schedule(sched));
    write_file(out_dir + "/tight.m", tmx::serialize_matching(p.m));
    write_file(out_dir + "/tight.opt", tmx::serialize_matching(p.opt));
  }
  return ok ? kOk : kFailed;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad probability '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-proposal stable matching with one-sided ties, and a checker of its 13/9 analysis"};
  app.require_subcommand(1);

  std::string inst_file, matching_file, dot_file, out_dir;
  ScheduleFlags sched_flags;
  bool trace = false;
  int bound = tmx::kDefaultOracleBound;

  auto* run = app.add_subcommand("run", "Run the proposal phase and print M");
  run->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);
  sched_flags.add(run);
  run->add_flag("--trace", trace, "Print accept/reject events to stderr");

  auto* verify = app.add_subcommand("verify", "List blocking pairs of a matching");
  verify->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);
  verify->add_option("matching", matching_file)->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Maximum stable matching by exhaustive search");
  oracle->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);
  oracle->add_option("--oracle-bound", bound, "Largest accepted number of men");

  auto* analyze = app.add_subcommand("analyze", "Check every statement of the analysis on one run");
  analyze->add_option("instance", inst_file)->required()->check(CLI::ExistingFile);
  sched_flags.add(analyze);
  analyze->add_option("--oracle-bound", bound, "Largest accepted number of men");
  analyze->add_option("--dot", dot_file, "Write H as Graphviz");

  tmx::CampaignConfig cfg;
  cfg.count = 1000;
  std::string edge_grid = "0.3,0.6,0.9", tie_grid = "0,0.3,0.7", policy = "mixed";
  bool no_minimize = false;
  auto* fuzz = app.add_subcommand("fuzz", "Random campaign checked against the oracle");
  fuzz->add_option("--count", cfg.count, "Number of instances");
  fuzz->add_option("--n-min", cfg.n_min, "Smallest number of men (= women)");
  fuzz->add_option("--n-max", cfg.n_max, "Largest number of men (= women)");
  fuzz->add_option("--edge-probs", edge_grid, "Comma-separated edge probabilities");
  fuzz->add_option("--tie-probs", tie_grid, "Comma-separated tie probabilities");
  fuzz->add_option("--seed", cfg.seed_base, "Campaign seed");
  fuzz->add_option("--policy", policy, "mixed, deterministic or seeded")
      ->check(CLI::IsMember({"mixed", "deterministic", "seeded"}));
  fuzz->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  fuzz->add_option("--oracle-bound", cfg.oracle_bound, "Largest accepted number of men");
  fuzz->add_option("--out", cfg.out_dir, "Directory for records.tsv, summary and failures");
  fuzz->add_flag("--no-minimize", no_minimize, "Archive failures without shrinking them");

  auto* tight = app.add_subcommand("tight", "Reproduce the instance with ratio exactly 13/9");
  tight->add_option("--out", out_dir, "Write the instance, schedule and matchings here");
  tight->add_option("--dot", dot_file, "Write H as Graphviz");
  tight->add_flag("--trace", trace, "Print accept/reject events to stderr");

  int men = 4, women = -1;
  double edge_prob = 0.6, tie_prob = 0.3;
  std::uint64_t gen_seed = 1;
  auto* generate = app.add_subcommand("generate", "Print a random instance");
  generate->add_option("--men", men, "Number of men")->check(CLI::NonNegativeNumber);
  generate->add_option("--women", women, "Number of women (default: same as men)");
  generate->add_option("--edge-prob", edge_prob)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--tie-prob", tie_prob)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen_seed);
  generate->add_option("--out", out_dir, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(inst_file, sched_flags, trace);
    if (*verify) return cmd_verify(inst_file, matching_file);
    if (*oracle) return cmd_oracle(inst_file, bound);
    if (*analyze) return cmd_analyze(inst_file, sched_flags, bound, dot_file);
    if (*tight) return cmd_tight(out_dir, dot_file, trace);
    if (*generate) {
      const auto inst = tmx::generate_random(men, women < 0 ? men : women, edge_prob, tie_prob, gen_seed);
      if (out_dir.empty())
        std::cout << tmx::serialize_instance(inst);
      else
        write_file(out_dir, tmx::serialize_instance(inst));
      return kOk;
    }
    if (*fuzz) {
      cfg.edge_probs = parse_grid(edge_grid);
      cfg.tie_probs = parse_grid(tie_grid);
      cfg.minimize = !no_minimize;
      cfg.policy = policy == "seeded"          ? tmx::CampaignConfig::PolicyMix::Seeded
                   : policy == "deterministic" ? tmx::CampaignConfig::PolicyMix::Deterministic
                                               : tmx::CampaignConfig::PolicyMix::Mixed;
      const tmx::CampaignReport rep = tmx::run_campaign(cfg);
      std::cout << rep.summary();
      for (const auto& f : rep.failures) {
        std::cout << "FAIL job " << f.index;
        for (const auto& id : f.failed) std::cout << ' ' << id;
        std::cout << '\n';
      }
      return rep.passed() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tmx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
