#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tiematch/analysis.hpp"
#include "tiematch/campaign.hpp"
#include "tiematch/error.hpp"
#include "tiematch/tight.hpp"
#include "tiematch/verify.hpp"

namespace py = pybind11;
using namespace tiematch;

namespace {

py::list pairs_of(const Matching& m) {
  py::list out;
  for (const auto& [a, b] : m.pairs()) out.append(py::make_tuple(a, b));
  return out;
}

py::list edges_of(const std::vector<Edge>& edges) {
  py::list out;
  for (const auto& [a, b] : edges) out.append(py::make_tuple(a, b));
  return out;
}

Matching matching_from(const Instance& inst, const std::vector<std::pair<int, int>>& pairs) {
  Matching m(inst.num_men(), inst.num_women());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= inst.num_men() || b < 0 || b >= inst.num_women() || !inst.adjacent(a, b))
      throw Error(ErrorCode::InvalidArgument, "pair is not an edge of the instance");
    m.add(a, b);
  }
  return m;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict lemmas;
  for (const auto& l : r.lemmas) lemmas[py::str(l.id)] = py::make_tuple(l.passed, l.witness);
  py::dict d;
  d["passed"] = r.passed();
  d["lemmas"] = lemmas;
  d["m_size"] = r.m_size;
  d["opt_size"] = r.opt_size;
  d["ratio"] = py::make_tuple(r.ratio.num(), r.ratio.den());
  d["t"] = r.t;
  d["k"] = r.k;
  d["ell_sum"] = r.ell_sum;
  d["steps"] = r.steps;
  d["text"] = r.to_text();
  return d;
}

}  // namespace

PYBIND11_MODULE(_tiematch, m) {
  m.doc() = "Two-proposal stable matching with one-sided ties";

  py::register_exception<Error>(m, "TiematchError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def_static("parse", [](const std::string& text) { return parse_instance(text); })
      .def_static("from_lists",
                  [](const std::vector<std::vector<int>>& men,
                     const std::vector<std::vector<std::vector<int>>>& women) {
                    RawInstance raw;
                    raw.num_men = static_cast<int>(men.size());
                    raw.num_women = static_cast<int>(women.size());
                    raw.men_prefs = men;
                    raw.women_prefs = women;
                    return validate(std::move(raw));
                  },
                  py::arg("men"), py::arg("women"))
      .def_static("random", &generate_random, py::arg("num_men"), py::arg("num_women"),
                  py::arg("edge_prob"), py::arg("tie_prob"), py::arg("seed"))
      .def_property_readonly("num_men", &Instance::num_men)
      .def_property_readonly("num_women", &Instance::num_women)
      .def_property_readonly("num_edges", &Instance::num_edges)
      .def("man_list", [](const Instance& i, int a) { return i.list(a); })
      .def("woman_groups", [](const Instance& i, int b) { return i.groups(b); })
      .def("serialize", &serialize_instance)
      .def("__eq__", [](const Instance& x, const Instance& y) { return x == y; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance men=" + std::to_string(i.num_men()) +
               " women=" + std::to_string(i.num_women()) + ">";
      });

  py::class_<Schedule>(m, "Schedule")
      .def_static("deterministic", &Schedule::deterministic)
      .def_static("seeded", &Schedule::seeded, py::arg("seed"))
      .def_static("parse", [](const std::string& text) { return parse_schedule(text); })
      .def("serialize", &serialize_schedule)
      .def("__repr__", [](const Schedule& s) { return "<Schedule " + s.describe() + ">"; });

  m.def(
      "run",
      [](const Instance& inst, const Schedule& sched) {
        const RunResult r = run(inst, sched);
        const Matching mm = extract_matching(r.graph, sched);
        py::dict d;
        d["matching"] = pairs_of(mm);
        d["accepted"] = edges_of(r.graph.edges());
        d["steps"] = r.steps;
        d["trace"] = format_trace(r.events);
        return d;
      },
      py::arg("instance"), py::arg("schedule") = Schedule::deterministic(),
      "Proposal phase plus output matching.");

  m.def(
      "opt_oracle",
      [](const Instance& inst, int bound) { return pairs_of(opt_oracle(inst, bound)); },
      py::arg("instance"), py::arg("bound") = kDefaultOracleBound);

  m.def(
      "blocking_pairs",
      [](const Instance& inst, const std::vector<std::pair<int, int>>& pairs) {
        return edges_of(find_blocking_pairs(inst, matching_from(inst, pairs)));
      },
      py::arg("instance"), py::arg("matching"));

  m.def(
      "verify",
      [](const Instance& inst, const Schedule& sched, int bound) {
        return report_dict(verify_all(inst, sched, bound));
      },
      py::arg("instance"), py::arg("schedule") = Schedule::deterministic(),
      py::arg("bound") = kDefaultOracleBound);

  m.def("tight_instance", &tight_instance);
  m.def("tight_schedule", &tight_schedule);
  m.def("tight_oracle_bound", [] { return kTightOracleBound; });

  m.def(
      "fuzz",
      [](int count, int n_min, int n_max, std::uint64_t seed, int jobs) {
        CampaignConfig cfg;
        cfg.count = count;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.seed_base = seed;
        cfg.jobs = jobs;
        CampaignReport rep;
        {
          py::gil_scoped_release release;
          rep = run_campaign(cfg);
        }
        py::dict d;
        d["instances"] = rep.records.size();
        d["failures"] = rep.failures.size();
        d["max_ratio"] = py::make_tuple(rep.max_ratio.num(), rep.max_ratio.den());
        d["tsv"] = rep.to_tsv();
        return d;
      },
      py::arg("count"), py::arg("n_min") = 2, py::arg("n_max") = 8, py::arg("seed") = 1,
      py::arg("jobs") = 1);
}
