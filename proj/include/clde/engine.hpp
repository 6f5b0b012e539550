#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clde/decode.hpp"
#include "clde/problem.hpp"
#include "clde/rng.hpp"

namespace clde {

enum class Mode { so, mo };

// Run parameters. Field names double as the config-file keys.
struct RunConfig {
  int population_size = 100;
  int max_generations = 200;
  double chaotic_mu = 4.0;
  double chaotic_step_init = 0.5;
  double chaotic_step_decay = 0.99;
  double crossover_rate = 0.9;
  int k_neighbors = 10;
  double persistence_tau_init = 0.10;
  double tau_min = 0.02;
  double tau_max = 0.30;
  double tau_gain = 0.20;
  double saliency_beta = 0.70;
  int quota_min = 1;
  double rankcrowd_kappa = 1.0;
  double local_sigma = 0.05;
  int archive_size = 5;
  std::uint64_t seed = 0;
  bool single_basin = false;   // skip decoding: one basin spans the canvas
  bool record_decode = false;  // keep per-generation canvas snapshots
};

// One line per generation. tau is the value used for that generation's
// decoding; the controller update applies from the next generation.
struct TraceRow {
  int generation = 0;          // 1-based
  long long evaluations = 0;   // cumulative
  int basin_count = 0;
  double tau = 0.0;
  double score = 0.0;          // best raw objective so far (SO) / front size (MO)
  double median_distance = 0.0;
};

struct ArchiveEntry {
  std::vector<double> x;
  std::vector<double> f;  // raw orientation
  double key = 0.0;       // minimizing-view sort key, single-objective only
};

// Best points remembered for one tracked basin, capacity-bounded and
// pairwise distinct beyond 1e-8 in decision space. SO entries stay
// sorted best-first.
struct BasinArchive {
  std::vector<ArchiveEntry> entries;
};

struct DecodeSnapshot {
  int generation = 0;
  std::vector<std::vector<double>> canvas;
  std::vector<double> heights;
  std::vector<int> labels;
  std::vector<char> is_representative;
};

struct RunResult {
  std::vector<std::vector<double>> population;  // final decision vectors
  std::vector<std::vector<double>> objectives;  // raw orientation
  std::vector<BasinArchive> archives;
  std::vector<TraceRow> trace;
  long long evaluations = 0;
  Mode mode = Mode::so;
  std::vector<std::string> notes;  // degenerate events observed during the run
  std::vector<DecodeSnapshot> snapshots;
};

// Full optimization loop. Per generation: variation through the chaotic
// perturbation, canvas = parents plus candidates, k-NN graph, height
// decoding into basins, gate adaptation, saliency-proportional quotas and
// basin-wise survival with per-basin archives. Deterministic for a fixed
// (config, problem, mode); objective evaluations total exactly
// population_size * max_generations.
RunResult run(const Problem& problem, const RunConfig& config, Mode mode);

// One Gaussian sample around a representative, std local_sigma * box
// width per dimension, clipped to the bounds.
std::vector<double> local_refine(const std::vector<double>& representative, double sigma_loc,
                                 const std::vector<double>& lower,
                                 const std::vector<double>& upper, Rng& rng);

// Single-objective survival: per funded basin, members sorted by fitness
// (ascending minimizing view, ties by lower canvas index) fill the quota;
// starved basins are topped up with local_refine samples around their
// representative when refills are allowed, otherwise with the best
// unselected canvas members.
struct SoUpdate {
  std::vector<int> survivors;                      // canvas indices
  std::vector<std::vector<double>> refills;        // fresh unevaluated points
  std::vector<int> refill_basins;                  // owning basin per refill
};

SoUpdate basin_update_so(const std::vector<std::vector<double>>& canvas,
                         const std::vector<double>& fitness,
                         const BasinDecomposition& decomp, const std::vector<int>& quotas,
                         double sigma_loc, const std::vector<double>& lower,
                         const std::vector<double>& upper, bool allow_refill, Rng& rng);

// Multi-objective survival: per funded basin the quota is filled in
// (canvas rank asc, crowding desc, index asc) order, so one basin spanning
// the canvas reduces exactly to select_n; any remaining deficit is filled
// by select_n over the unbuffered remainder. Returns canvas indices.
std::vector<int> basin_update_mo(const std::vector<std::vector<double>>& objectives,
                                 const BasinDecomposition& decomp,
                                 const std::vector<int>& quotas, int n_select);

// Archive admission. SO keeps entries sorted by key (minimizing view,
// insertion-stable), rejects near-duplicates within 1e-8 and evicts the
// worst entry when past capacity. MO admits nondominated entries through
// a rank-then-crowding reduction of the pooled set. Returns true when the
// offered entry is kept.
bool archive_offer_so(BasinArchive& archive, const ArchiveEntry& entry, double key,
                      int capacity);
bool archive_offer_mo(BasinArchive& archive, const ArchiveEntry& entry,
                      const std::vector<double>& entry_min_view, Sense sense, int capacity);

}  // namespace clde
