#include "tiematch/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "tiematch/error.hpp"
#include "tiematch/verify.hpp"

namespace tiematch {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string fmt_prob(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

std::string policy_name(const Schedule& s) {
  switch (s.policy()) {
    case Schedule::Policy::Deterministic: return "deterministic";
    case Schedule::Policy::Seeded: return "seeded";
    case Schedule::Policy::Scripted: return "scripted";
  }
  return "?";
}

std::vector<std::string> failures_of(const Instance& inst, const Schedule& sched, int bound) {
  try {
    return verify_all(inst, sched, bound).failed_ids();
  } catch (const Error& e) {
    return {"error:" + std::string(to_string(e.code()))};
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

}  // namespace

void CampaignConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (count < 0) bad("count must be nonnegative");
  if (n_min < 1 || n_max < n_min) bad("size range must satisfy 1 <= n-min <= n-max");
  if (edge_probs.empty() || tie_probs.empty()) bad("probability grids must be nonempty");
  for (const double p : edge_probs)
    if (p < 0 || p > 1) bad("edge probability outside [0,1]");
  for (const double p : tie_probs)
    if (p < 0 || p > 1) bad("tie probability outside [0,1]");
  if (oracle_bound < n_max) bad("oracle bound below n-max");
  if (jobs < 0) bad("jobs must be nonnegative");
}

CampaignJob campaign_job(const CampaignConfig& config, int index) {
  CampaignJob job;
  job.index = index;
  job.seed = splitmix64(config.seed_base + static_cast<std::uint64_t>(index));
  const int span = config.n_max - config.n_min + 1;
  job.n = config.n_min + static_cast<int>(splitmix64(job.seed) % static_cast<std::uint64_t>(span));
  const auto ne = config.edge_probs.size();
  const auto nt = config.tie_probs.size();
  job.edge_prob = config.edge_probs[static_cast<std::size_t>(index) % ne];
  job.tie_prob = config.tie_probs[(static_cast<std::size_t>(index) / ne) % nt];
  bool seeded = false;
  switch (config.policy) {
    case CampaignConfig::PolicyMix::Mixed: seeded = index % 2 == 1; break;
    case CampaignConfig::PolicyMix::Deterministic: seeded = false; break;
    case CampaignConfig::PolicyMix::Seeded: seeded = true; break;
  }
  job.schedule = seeded ? Schedule::seeded(job.seed) : Schedule::deterministic();
  return job;
}

CampaignRecord evaluate_job(const CampaignJob& job, int oracle_bound) {
  CampaignRecord rec;
  rec.job = job;
  const Instance inst = generate_random(job.n, job.n, job.edge_prob, job.tie_prob, job.seed);
  rec.num_edges = inst.num_edges();
  try {
    const Pipeline p = build_pipeline(inst, job.schedule, oracle_bound);
    const VerificationReport rep = verify_pipeline(p);
    rec.m_size = rep.m_size;
    rec.opt_size = rep.opt_size;
    rec.ratio = rep.ratio;
    rec.t = rep.t;
    rec.k = rep.k;
    rec.ell_sum = rep.ell_sum;
    rec.steps = rep.steps;
    rec.stable = is_stable(inst, p.m);
    rec.failed = rep.failed_ids();
    std::map<std::string, int> hist;
    for (const auto& c : p.diff.components)
      ++hist[to_string(c.kind) + ":" + std::to_string(c.num_edges)];
    if (!p.diff.shared.empty()) hist["shared:2"] = static_cast<int>(p.diff.shared.size());
    rec.components.assign(hist.begin(), hist.end());
  } catch (const Error& e) {
    rec.failed = {"error:" + std::string(to_string(e.code()))};
  }
  rec.passed = rec.failed.empty();
  return rec;
}

Instance minimize_witness(const Instance& inst,
                          const std::function<bool(const Instance&)>& still_fails) {
  Instance cur = inst;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Man a = 0; a < cur.num_men() && !progress; ++a) {
      Instance next = remove_man(cur, a);
      if (still_fails(next)) {
        cur = std::move(next);
        progress = true;
      }
    }
    for (Woman b = 0; b < cur.num_women() && !progress; ++b) {
      Instance next = remove_woman(cur, b);
      if (still_fails(next)) {
        cur = std::move(next);
        progress = true;
      }
    }
    for (Man a = 0; a < cur.num_men() && !progress; ++a) {
      for (const Woman b : cur.list(a)) {
        Instance next = remove_edge(cur, a, b);
        if (still_fails(next)) {
          cur = std::move(next);
          progress = true;
          break;
        }
      }
    }
  }
  return cur;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  CampaignReport report;
  report.records.resize(static_cast<std::size_t>(config.count));

  int workers = config.jobs > 0 ? config.jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(1, config.count));
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    for (int i = next++; i < config.count; i = next++) {
      try {
        report.records[i] = evaluate_job(campaign_job(config, i), config.oracle_bound);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (const auto& rec : report.records) {
    if (rec.m_size > 0 && rec.ratio > report.max_ratio) report.max_ratio = rec.ratio;
    if (rec.passed) continue;
    const CampaignJob& job = rec.job;
    const Instance inst = generate_random(job.n, job.n, job.edge_prob, job.tie_prob, job.seed);
    CampaignFailure f;
    f.index = job.index;
    f.failed = rec.failed;
    f.instance_text = serialize_instance(inst);
    Instance small = inst;
    if (config.minimize) {
      const std::string first = rec.failed.front();
      small = minimize_witness(inst, [&](const Instance& cand) {
        const auto now = failures_of(cand, job.schedule, config.oracle_bound);
        return std::find(now.begin(), now.end(), first) != now.end();
      });
    }
    f.minimized_text = serialize_instance(small);
    try {
      f.report_text = verify_all(small, job.schedule, config.oracle_bound).to_text();
    } catch (const Error& e) {
      f.report_text = std::string("error: ") + e.what() + "\n";
    }
    report.failures.push_back(std::move(f));
  }

  if (!config.out_dir.empty()) {
    namespace fs = std::filesystem;
    const fs::path root(config.out_dir);
    fs::create_directories(root);
    write_file(root / "records.tsv", report.to_tsv());
    write_file(root / "summary.txt", report.summary());
    if (!report.failures.empty()) fs::create_directories(root / "failures");
    for (const auto& f : report.failures) {
      const std::string stem = "job" + std::to_string(f.index);
      const auto& sched = report.records[f.index].job.schedule;
      write_file(root / "failures" / (stem + ".inst"), f.instance_text);
      write_file(root / "failures" / (stem + ".min.inst"), f.minimized_text);
      write_file(root / "failures" / (stem + ".sched"), "# " + sched.describe() + "\n");
      write_file(root / "failures" / (stem + ".report"), f.report_text);
    }
  }
  return report;
}

std::string CampaignReport::to_tsv() const {
  std::ostringstream out;
  out << "index\tseed\tn\tedge_prob\ttie_prob\tpolicy\tedges\tm\topt\tratio\tt\tk\tell_sum"
         "\tsteps\tstable\tpassed\tfailed\tcomponents\n";
  for (const auto& r : records) {
    out << r.job.index << '\t' << r.job.seed << '\t' << r.job.n << '\t' << fmt_prob(r.job.edge_prob)
        << '\t' << fmt_prob(r.job.tie_prob) << '\t' << policy_name(r.job.schedule) << '\t'
        << r.num_edges << '\t' << r.m_size << '\t' << r.opt_size << '\t' << r.ratio.str() << '\t'
        << r.t << '\t' << r.k << '\t' << r.ell_sum << '\t' << r.steps << '\t' << (r.stable ? 1 : 0)
        << '\t' << (r.passed ? 1 : 0) << '\t';
    if (r.failed.empty()) out << '-';
    for (std::size_t i = 0; i < r.failed.size(); ++i) out << (i ? "," : "") << r.failed[i];
    out << '\t';
    if (r.components.empty()) out << '-';
    for (std::size_t i = 0; i < r.components.size(); ++i)
      out << (i ? "," : "") << r.components[i].first << "=" << r.components[i].second;
    out << '\n';
  }
  return out.str();
}

std::string CampaignReport::summary() const {
  std::ostringstream out;
  int stable = 0;
  std::map<std::string, int> failed;
  for (const auto& r : records) {
    stable += r.stable ? 1 : 0;
    for (const auto& id : r.failed) ++failed[id];
  }
  out << "instances = " << records.size() << '\n'
      << "stable = " << stable << '\n'
      << "failures = " << failures.size() << '\n'
      << "max ratio = " << max_ratio.str() << '\n';
  for (const auto& [id, n] : failed) out << "failed " << id << " = " << n << '\n';
  return out.str();
}

}  // namespace tiematch
