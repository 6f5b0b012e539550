#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "clde/chaos.hpp"
#include "clde/decode.hpp"
#include "clde/engine.hpp"
#include "clde/graph.hpp"
#include "clde/metrics.hpp"
#include "clde/problem.hpp"
#include "clde/saliency.hpp"

namespace py = pybind11;
using namespace clde;

namespace {

RunConfig config_from_kwargs(const py::kwargs& kwargs) {
  RunConfig c;
  for (const auto& item : kwargs) {
    const std::string key = py::cast<std::string>(item.first);
    const py::handle v = item.second;
    if (key == "population_size")
      c.population_size = py::cast<int>(v);
    else if (key == "max_generations")
      c.max_generations = py::cast<int>(v);
    else if (key == "chaotic_mu")
      c.chaotic_mu = py::cast<double>(v);
    else if (key == "chaotic_step_init")
      c.chaotic_step_init = py::cast<double>(v);
    else if (key == "chaotic_step_decay")
      c.chaotic_step_decay = py::cast<double>(v);
    else if (key == "crossover_rate")
      c.crossover_rate = py::cast<double>(v);
    else if (key == "k_neighbors")
      c.k_neighbors = py::cast<int>(v);
    else if (key == "persistence_tau_init")
      c.persistence_tau_init = py::cast<double>(v);
    else if (key == "tau_min")
      c.tau_min = py::cast<double>(v);
    else if (key == "tau_max")
      c.tau_max = py::cast<double>(v);
    else if (key == "tau_gain")
      c.tau_gain = py::cast<double>(v);
    else if (key == "saliency_beta")
      c.saliency_beta = py::cast<double>(v);
    else if (key == "quota_min")
      c.quota_min = py::cast<int>(v);
    else if (key == "rankcrowd_kappa")
      c.rankcrowd_kappa = py::cast<double>(v);
    else if (key == "local_sigma")
      c.local_sigma = py::cast<double>(v);
    else if (key == "archive_size")
      c.archive_size = py::cast<int>(v);
    else if (key == "seed")
      c.seed = py::cast<std::uint64_t>(v);
    else if (key == "single_basin")
      c.single_basin = py::cast<bool>(v);
    else if (key == "record_decode")
      c.record_decode = py::cast<bool>(v);
    else
      throw std::invalid_argument("unknown config field: '" + key + "'");
  }
  return c;
}

py::dict result_to_dict(const RunResult& r) {
  py::dict out;
  out["population"] = r.population;
  out["objectives"] = r.objectives;

  py::list archives;
  for (const BasinArchive& arch : r.archives) {
    py::list entries;
    for (const ArchiveEntry& e : arch.entries) {
      py::dict entry;
      entry["x"] = e.x;
      entry["f"] = e.f;
      entries.append(entry);
    }
    archives.append(entries);
  }
  out["archives"] = archives;

  py::list trace;
  for (const TraceRow& row : r.trace) {
    py::dict t;
    t["generation"] = row.generation;
    t["evaluations"] = row.evaluations;
    t["basin_count"] = row.basin_count;
    t["tau"] = row.tau;
    t["score"] = row.score;
    t["median_distance"] = row.median_distance;
    trace.append(t);
  }
  out["trace"] = trace;

  out["evaluations"] = r.evaluations;
  out["mode"] = r.mode == Mode::mo ? "mo" : "so";
  out["notes"] = r.notes;

  if (!r.snapshots.empty()) {
    py::list snaps;
    for (const DecodeSnapshot& s : r.snapshots) {
      py::dict d;
      d["generation"] = s.generation;
      d["canvas"] = s.canvas;
      d["heights"] = s.heights;
      d["labels"] = s.labels;
      d["is_representative"] = s.is_representative;
      snaps.append(d);
    }
    out["snapshots"] = snaps;
  }
  return out;
}

Mode resolve_mode(const Problem& p, const std::string& mode) {
  if (mode == "so") return Mode::so;
  if (mode == "mo") return Mode::mo;
  if (mode.empty()) return p.n_obj > 1 ? Mode::mo : Mode::so;
  throw std::invalid_argument("mode must be 'so', 'mo', or omitted");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "multimodal optimization with chaotic variation and basin decoding";

  m.def("problem_ids", &problem_ids, "List the built-in benchmark ids.");

  m.def(
      "problem_info",
      [](const std::string& id) {
        const Problem p = make_problem(id);
        py::dict d;
        d["id"] = p.id;
        d["dim"] = p.dim;
        d["n_objectives"] = p.n_obj;
        d["sense"] = p.sense == Sense::maximize ? "maximize" : "minimize";
        d["lower"] = p.lower;
        d["upper"] = p.upper;
        d["has_peaks"] = p.has_peaks;
        d["known_optima"] = p.known_optima;
        d["peak_height"] = p.peak_height;
        d["pareto_front_ref"] = p.pareto_front_ref;
        d["pareto_set_ref"] = p.pareto_set_ref;
        return d;
      },
      py::arg("problem"), "Bounds, objective count, and catalogued optima for a problem.");

  m.def(
      "evaluate",
      [](const std::string& id, const std::vector<double>& x) {
        return make_problem(id).evaluate(x);
      },
      py::arg("problem"), py::arg("x"), "Evaluate one point of a built-in problem.");

  m.def(
      "run",
      [](const std::string& problem, const std::string& mode, const py::kwargs& kwargs) {
        const Problem p = make_problem(problem);
        const RunConfig cfg = config_from_kwargs(kwargs);
        return result_to_dict(run(p, cfg, resolve_mode(p, mode)));
      },
      py::arg("problem"), py::arg("mode") = "",
      "Run the optimizer; config fields are keyword arguments.");

  m.def(
      "knn_adjacency",
      [](const std::vector<std::vector<double>>& points, int k) {
        return knn_graph(points, k).adjacency;
      },
      py::arg("points"), py::arg("k"),
      "Symmetric k-nearest-neighbour adjacency lists over a point set.");

  m.def("normalize_heights", &normalize_heights, py::arg("values"),
        "Affine rescale onto [0, 1]; constant input maps to all 0.5.");

  m.def(
      "decode_basins",
      [](const std::vector<std::vector<int>>& adjacency, const std::vector<double>& heights,
         double tau) {
        NeighborGraph g;
        g.node_count = static_cast<int>(adjacency.size());
        g.adjacency = adjacency;
        const BasinDecomposition d = decode_basins(g, heights, tau);
        py::dict out;
        out["labels"] = d.labels;
        out["representatives"] = d.representatives;
        out["members"] = d.members;
        out["basin_count"] = d.basin_count;
        return out;
      },
      py::arg("adjacency"), py::arg("heights"), py::arg("tau"),
      "Persistence-gated watershed over a graph with node heights in [0, 1].");

  m.def(
      "adapt_tau",
      [](double tau, double tau_min, double tau_max, double gamma, int k_target,
         int basin_count) {
        PersistenceController ctrl;
        ctrl.tau = tau;
        ctrl.tau_min = tau_min;
        ctrl.tau_max = tau_max;
        ctrl.gamma = gamma;
        ctrl.k_target = k_target;
        return adapt_tau(ctrl, basin_count).tau;
      },
      py::arg("tau"), py::arg("tau_min"), py::arg("tau_max"), py::arg("gamma"),
      py::arg("k_target"), py::arg("basin_count"),
      "One multiplicative feedback step of the merge-gate width.");

  m.def("allocate_quotas", &allocate_quotas, py::arg("saliency"), py::arg("total"),
        py::arg("quota_min"),
        "Split a budget across basins proportionally to saliency, with floors.");

  m.def("peak_ratio", &peak_ratio, py::arg("runs"), py::arg("optima"), py::arg("epsilon"),
        "Fraction of catalogued optima matched one-to-one across runs.");

  m.def("igd", &igd, py::arg("approx"), py::arg("reference"),
        "Mean distance from each reference point to its nearest approximation point.");

  m.def("igdx", &igdx, py::arg("approx_decision"), py::arg("reference_set"),
        "The same averaging in decision space.");

  m.def("median_pairwise_distance", &median_pairwise_distance, py::arg("points"),
        "Median of all pairwise Euclidean distances.");

  m.def(
      "bifurcation_scan",
      [](const std::vector<double>& mu_values, int transient, int samples,
         std::uint64_t seed) {
        std::vector<std::pair<double, double>> out;
        for (const BifurcationPoint& p : bifurcation_scan(mu_values, transient, samples, seed))
          out.emplace_back(p.mu, p.z);
        return out;
      },
      py::arg("mu_values"), py::arg("transient") = 1000, py::arg("samples") = 200,
      py::arg("seed") = 1,
      "Long-run samples of the logistic map per mu value, as (mu, z) pairs.");
}
