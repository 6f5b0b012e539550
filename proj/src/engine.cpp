#include "clde/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "clde/chaos.hpp"
#include "clde/graph.hpp"
#include "clde/metrics.hpp"
#include "clde/mo_select.hpp"
#include "clde/saliency.hpp"

namespace clde {

namespace {

void check_config(const Problem& problem, const RunConfig& c, Mode mode) {
  if (c.population_size < 2) throw std::invalid_argument("population_size must be >= 2");
  if (c.max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
  if (c.k_neighbors < 1) throw std::invalid_argument("k_neighbors must be >= 1");
  if (!(c.chaotic_mu > 0.0) || c.chaotic_mu > 4.0)
    throw std::invalid_argument("chaotic_mu must lie in (0, 4]");
  if (c.chaotic_step_init < 0.0) throw std::invalid_argument("chaotic_step_init must be >= 0");
  if (!(c.chaotic_step_decay > 0.0) || c.chaotic_step_decay > 1.0)
    throw std::invalid_argument("chaotic_step_decay must lie in (0, 1]");
  if (c.crossover_rate < 0.0 || c.crossover_rate > 1.0)
    throw std::invalid_argument("crossover_rate must lie in [0, 1]");
  if (!(c.tau_min > 0.0) || c.tau_min > c.tau_max)
    throw std::invalid_argument("need 0 < tau_min <= tau_max");
  if (c.persistence_tau_init < c.tau_min || c.persistence_tau_init > c.tau_max)
    throw std::invalid_argument("persistence_tau_init must lie in [tau_min, tau_max]");
  if (c.tau_gain < 0.0) throw std::invalid_argument("tau_gain must be >= 0");
  if (c.saliency_beta < 0.0 || c.saliency_beta > 1.0)
    throw std::invalid_argument("saliency_beta must lie in [0, 1]");
  if (c.quota_min < 1) throw std::invalid_argument("quota_min must be >= 1");
  if (c.quota_min > c.population_size)
    throw std::invalid_argument("quota_min exceeds population_size");
  if (c.rankcrowd_kappa < 0.0) throw std::invalid_argument("rankcrowd_kappa must be >= 0");
  if (c.local_sigma < 0.0) throw std::invalid_argument("local_sigma must be >= 0");
  if (c.archive_size < 1) throw std::invalid_argument("archive_size must be >= 1");
  if (mode == Mode::so && problem.n_obj != 1)
    throw std::invalid_argument("single-objective mode needs a 1-objective problem");
  if (mode == Mode::mo && problem.n_obj < 2)
    throw std::invalid_argument("multi-objective mode needs >= 2 objectives");
}

double min_view_scalar(const Problem& p, const std::vector<double>& f) {
  return p.sense == Sense::maximize ? -f[0] : f[0];
}

std::vector<double> min_view_vector(const Problem& p, const std::vector<double>& f) {
  if (p.sense == Sense::minimize) return f;
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -f[i];
  return out;
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

int nearest_node(const std::vector<std::vector<double>>& points,
                 const std::vector<double>& x) {
  int best = 0;
  double best_d = sq_dist(points[0], x);
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    const double d = sq_dist(points[i], x);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// global nondomination rank plus front-local crowding for every canvas row
struct MoOrder {
  std::vector<int> rank;
  std::vector<double> crowd;
  std::vector<char> maximal;
};

MoOrder mo_canvas_order(const std::vector<std::vector<double>>& objectives) {
  MoOrder ord;
  ord.rank = fast_nondominated_sort(objectives);
  const int n = static_cast<int>(objectives.size());
  ord.crowd.assign(n, 0.0);
  ord.maximal.assign(n, 0);
  const int max_rank = *std::max_element(ord.rank.begin(), ord.rank.end());
  for (int r = 1; r <= max_rank; ++r) {
    std::vector<int> front;
    for (int i = 0; i < n; ++i)
      if (ord.rank[i] == r) front.push_back(i);
    if (front.empty()) continue;
    const FrontCrowding fc = crowding_distance(objectives, front);
    for (std::size_t j = 0; j < front.size(); ++j) {
      ord.crowd[front[j]] = fc.value[j];
      ord.maximal[front[j]] = fc.maximal[j];
    }
  }
  return ord;
}

// better-first: rank asc, then crowding desc with the maximal flag on top,
// then lower canvas index
bool mo_better(const MoOrder& ord, int a, int b) {
  if (ord.rank[a] != ord.rank[b]) return ord.rank[a] < ord.rank[b];
  if (ord.maximal[a] != ord.maximal[b]) return ord.maximal[a] > ord.maximal[b];
  if (!ord.maximal[a] && ord.crowd[a] != ord.crowd[b]) return ord.crowd[a] > ord.crowd[b];
  return a < b;
}

BasinDecomposition whole_canvas_basin(const std::vector<double>& heights) {
  BasinDecomposition d;
  const int n = static_cast<int>(heights.size());
  d.labels.assign(n, 0);
  int rep = 0;
  for (int i = 1; i < n; ++i)
    if (heights[i] > heights[rep]) rep = i;
  d.representatives = {rep};
  d.members.resize(1);
  for (int i = 0; i < n; ++i) d.members[0].push_back(i);
  d.basin_count = 1;
  return d;
}

}  // namespace

std::vector<double> local_refine(const std::vector<double>& representative, double sigma_loc,
                                 const std::vector<double>& lower,
                                 const std::vector<double>& upper, Rng& rng) {
  std::vector<double> x(representative.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double width = upper[j] - lower[j];
    x[j] = std::clamp(representative[j] + rng.normal() * sigma_loc * width, lower[j],
                      upper[j]);
  }
  return x;
}

SoUpdate basin_update_so(const std::vector<std::vector<double>>& canvas,
                         const std::vector<double>& fitness,
                         const BasinDecomposition& decomp, const std::vector<int>& quotas,
                         double sigma_loc, const std::vector<double>& lower,
                         const std::vector<double>& upper, bool allow_refill, Rng& rng) {
  if (canvas.size() != fitness.size() || decomp.labels.size() != canvas.size())
    throw std::invalid_argument("basin_update_so: inconsistent canvas shapes");
  if (static_cast<int>(quotas.size()) != decomp.basin_count)
    throw std::invalid_argument("basin_update_so: quota count != basin count");

  SoUpdate upd;
  std::vector<char> taken(canvas.size(), 0);
  for (int k = 0; k < decomp.basin_count; ++k) {
    const int quota = quotas[k];
    if (quota <= 0) continue;
    std::vector<int> members = decomp.members[k];
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      if (fitness[a] != fitness[b]) return fitness[a] < fitness[b];
      return a < b;
    });
    const int keep = std::min<int>(quota, static_cast<int>(members.size()));
    for (int i = 0; i < keep; ++i) {
      upd.survivors.push_back(members[i]);
      taken[members[i]] = 1;
    }
    if (allow_refill) {
      const auto& rep = canvas[decomp.representatives[k]];
      for (int i = keep; i < quota; ++i) {
        upd.refills.push_back(local_refine(rep, sigma_loc, lower, upper, rng));
        upd.refill_basins.push_back(k);
      }
    }
  }
  if (!allow_refill) {
    int need = 0;
    for (int q : quotas) need += q;
    need -= static_cast<int>(upd.survivors.size());
    if (need > 0) {
      std::vector<int> rest;
      for (int i = 0; i < static_cast<int>(canvas.size()); ++i)
        if (!taken[i]) rest.push_back(i);
      std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        if (fitness[a] != fitness[b]) return fitness[a] < fitness[b];
        return a < b;
      });
      if (static_cast<int>(rest.size()) < need)
        throw std::logic_error("basin_update_so: canvas too small to fill population");
      for (int i = 0; i < need; ++i) upd.survivors.push_back(rest[i]);
    }
  }
  return upd;
}

std::vector<int> basin_update_mo(const std::vector<std::vector<double>>& objectives,
                                 const BasinDecomposition& decomp,
                                 const std::vector<int>& quotas, int n_select) {
  const int n = static_cast<int>(objectives.size());
  if (static_cast<int>(decomp.labels.size()) != n)
    throw std::invalid_argument("basin_update_mo: inconsistent canvas shapes");
  if (static_cast<int>(quotas.size()) != decomp.basin_count)
    throw std::invalid_argument("basin_update_mo: quota count != basin count");
  if (n_select > n)
    throw std::invalid_argument("basin_update_mo: cannot select more rows than the canvas");

  const MoOrder ord = mo_canvas_order(objectives);
  std::vector<char> taken(n, 0);
  std::vector<int> buffer;
  for (int k = 0; k < decomp.basin_count; ++k) {
    const int quota = quotas[k];
    if (quota <= 0) continue;
    std::vector<int> members = decomp.members[k];
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return mo_better(ord, a, b); });
    const int keep = std::min<int>(quota, static_cast<int>(members.size()));
    for (int i = 0; i < keep; ++i) {
      buffer.push_back(members[i]);
      taken[members[i]] = 1;
    }
  }
  const int deficit = n_select - static_cast<int>(buffer.size());
  if (deficit > 0) {
    std::vector<int> rest;
    std::vector<std::vector<double>> rest_obj;
    for (int i = 0; i < n; ++i)
      if (!taken[i]) {
        rest.push_back(i);
        rest_obj.push_back(objectives[i]);
      }
    for (int local : select_n(rest_obj, deficit)) buffer.push_back(rest[local]);
  }
  std::sort(buffer.begin(), buffer.end());
  return buffer;
}

bool archive_offer_so(BasinArchive& archive, const ArchiveEntry& entry, double key,
                      int capacity) {
  for (const auto& e : archive.entries)
    if (std::sqrt(sq_dist(e.x, entry.x)) <= 1e-8) return false;
  std::size_t pos = 0;
  while (pos < archive.entries.size() && archive.entries[pos].key <= key) ++pos;
  const std::size_t before = archive.entries.size();
  ArchiveEntry stored = entry;
  stored.key = key;
  archive.entries.insert(archive.entries.begin() + pos, std::move(stored));
  if (static_cast<int>(archive.entries.size()) > capacity) {
    archive.entries.pop_back();
    return pos < before;
  }
  return true;
}

bool archive_offer_mo(BasinArchive& archive, const ArchiveEntry& entry,
                      const std::vector<double>& entry_min_view, Sense sense, int capacity) {
  for (const auto& e : archive.entries)
    if (std::sqrt(sq_dist(e.x, entry.x)) <= 1e-8) return false;

  auto stored_min_view = [&](const ArchiveEntry& e) {
    std::vector<double> v = e.f;
    if (sense == Sense::maximize)
      for (double& t : v) t = -t;
    return v;
  };
  for (const auto& e : archive.entries)
    if (dominates(stored_min_view(e), entry_min_view)) return false;

  std::vector<ArchiveEntry> kept;
  for (auto& e : archive.entries)
    if (!dominates(entry_min_view, stored_min_view(e))) kept.push_back(std::move(e));
  kept.push_back(entry);

  if (static_cast<int>(kept.size()) > capacity) {
    std::vector<std::vector<double>> obj;
    for (const auto& e : kept) obj.push_back(stored_min_view(e));
    std::vector<int> front(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) front[i] = static_cast<int>(i);
    const FrontCrowding fc = crowding_distance(obj, front);
    // drop the least crowded until at capacity; ties drop the newest
    std::vector<int> order = front;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (fc.maximal[a] != fc.maximal[b]) return fc.maximal[a] < fc.maximal[b];
      if (!fc.maximal[a] && fc.value[a] != fc.value[b]) return fc.value[a] < fc.value[b];
      return a > b;
    });
    std::unordered_set<int> drop(order.begin(),
                                 order.begin() + (kept.size() - capacity));
    std::vector<ArchiveEntry> trimmed;
    bool entry_kept = false;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (!drop.count(static_cast<int>(i))) {
        if (i + 1 == kept.size()) entry_kept = true;
        trimmed.push_back(std::move(kept[i]));
      }
    archive.entries = std::move(trimmed);
    return entry_kept;
  }
  archive.entries = std::move(kept);
  return true;
}

RunResult run(const Problem& problem, const RunConfig& config, Mode mode) {
  check_config(problem, config, mode);

  const int N = config.population_size;
  const int T = config.max_generations;
  const int dim = problem.dim;
  Rng rng(config.seed);

  RunResult result;
  result.mode = mode;

  std::vector<std::vector<double>> pop(N, std::vector<double>(dim));
  std::vector<std::vector<double>> pop_f(N);
  std::vector<int> pending;  // population rows awaiting evaluation

  long long evals = 0;
  double best_min = std::numeric_limits<double>::infinity();
  double best_raw = std::numeric_limits<double>::quiet_NaN();
  auto note_eval = [&](const std::vector<double>& f) {
    ++evals;
    if (mode == Mode::so) {
      const double mv = min_view_scalar(problem, f);
      if (mv < best_min) {
        best_min = mv;
        best_raw = f[0];
      }
    }
  };

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < dim; ++j) pop[i][j] = rng.uniform(problem.lower[j], problem.upper[j]);
  for (int i = 0; i < N; ++i) {
    pop_f[i] = problem.evaluate(pop[i]);
    note_eval(pop_f[i]);
  }

  ChaoticState chaos = make_chaotic_state(N, dim, config.chaotic_mu, config.chaotic_step_init,
                                          config.chaotic_step_decay, config.crossover_rate, rng);

  PersistenceController ctrl;
  ctrl.tau = config.persistence_tau_init;
  ctrl.tau_min = config.tau_min;
  ctrl.tau_max = config.tau_max;
  ctrl.gamma = config.tau_gain;
  ctrl.k_target = std::clamp(static_cast<int>(std::lround(std::sqrt(double(N)))), 2,
                             std::max(2, N / 2));

  std::vector<BasinArchive> archives;

  for (int t = 1; t <= T; ++t) {
    std::vector<std::vector<double>> canvas;
    std::vector<std::vector<double>> canvas_f;
    canvas.reserve(2 * N);
    canvas_f.reserve(2 * N);

    if (t == 1) {
      canvas = pop;
      canvas_f = pop_f;
      canvas.insert(canvas.end(), pop.begin(), pop.end());
      canvas_f.insert(canvas_f.end(), pop_f.begin(), pop_f.end());
    } else {
      for (int i : pending) {
        pop_f[i] = problem.evaluate(pop[i]);
        note_eval(pop_f[i]);
      }
      std::vector<char> deferred(N, 0);
      for (int i : pending) deferred[i] = 1;
      PerturbResult pr = perturb(pop, chaos, problem.lower, problem.upper, rng);
      chaos = pr.state;
      canvas = pop;
      canvas_f = pop_f;
      for (int i = 0; i < N; ++i) {
        if (deferred[i]) continue;
        canvas.push_back(pr.candidates[i]);
        canvas_f.push_back(problem.evaluate(pr.candidates[i]));
        note_eval(canvas_f.back());
      }
    }
    pending.clear();

    const int n_canvas = static_cast<int>(canvas.size());
    std::vector<double> heights(n_canvas);
    if (mode == Mode::so) {
      for (int i = 0; i < n_canvas; ++i) heights[i] = -min_view_scalar(problem, canvas_f[i]);
    } else {
      std::vector<std::vector<double>> mv(n_canvas);
      for (int i = 0; i < n_canvas; ++i) mv[i] = min_view_vector(problem, canvas_f[i]);
      heights = rank_crowding_height(mv, config.rankcrowd_kappa);
    }
    heights = normalize_heights(heights);

    const double tau_used = ctrl.tau;
    BasinDecomposition decomp;
    if (config.single_basin) {
      decomp = whole_canvas_basin(heights);
    } else {
      const NeighborGraph graph = knn_graph(canvas, config.k_neighbors);
      decomp = decode_basins(graph, heights, tau_used);
    }
    ctrl = adapt_tau(ctrl, decomp.basin_count);

    std::vector<double> fitness_min;
    std::vector<std::vector<double>> obj_min;
    MoOrder ord;
    if (mode == Mode::so) {
      fitness_min.resize(n_canvas);
      for (int i = 0; i < n_canvas; ++i)
        fitness_min[i] = min_view_scalar(problem, canvas_f[i]);
    } else {
      obj_min.resize(n_canvas);
      for (int i = 0; i < n_canvas; ++i) obj_min[i] = min_view_vector(problem, canvas_f[i]);
      ord = mo_canvas_order(obj_min);
    }

    // archive upkeep: every basin offers its best member to the nearest
    // archive tracking it, or opens a new archive
    std::vector<int> archive_basin(archives.size());
    for (std::size_t a = 0; a < archives.size(); ++a)
      archive_basin[a] = decomp.labels[nearest_node(canvas, archives[a].entries[0].x)];
    for (int k = 0; k < decomp.basin_count; ++k) {
      int best = decomp.members[k][0];
      for (int m : decomp.members[k]) {
        if (mode == Mode::so) {
          if (fitness_min[m] < fitness_min[best] ||
              (fitness_min[m] == fitness_min[best] && m < best))
            best = m;
        } else if (mo_better(ord, m, best)) {
          best = m;
        }
      }
      ArchiveEntry entry{canvas[best], canvas_f[best]};
      int target = -1;
      double target_d = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < archive_basin.size(); ++a) {
        if (archive_basin[a] != k) continue;
        const double d = sq_dist(archives[a].entries[0].x, entry.x);
        if (d < target_d) {
          target_d = d;
          target = static_cast<int>(a);
        }
      }
      if (target < 0) {
        BasinArchive fresh;
        if (mode == Mode::so) {
          archive_offer_so(fresh, entry, fitness_min[best], config.archive_size);
        } else {
          archive_offer_mo(fresh, entry, obj_min[best], problem.sense, config.archive_size);
        }
        archives.push_back(std::move(fresh));
      } else if (mode == Mode::so) {
        archive_offer_so(archives[target], entry, fitness_min[best], config.archive_size);
      } else {
        archive_offer_mo(archives[target], entry, obj_min[best], problem.sense,
                         config.archive_size);
      }
    }

    const BasinStats stats = basin_stats(decomp, heights);
    const std::vector<double> sal = saliency(stats, config.saliency_beta);
    if (decomp.basin_count * config.quota_min > N)
      result.notes.push_back("generation " + std::to_string(t) + ": quota floor exceeds budget (" +
                             std::to_string(decomp.basin_count) + " basins), funding most salient only");
    const std::vector<int> quotas = allocate_quotas(sal, N, config.quota_min);

    if (mode == Mode::so) {
      const SoUpdate upd =
          basin_update_so(canvas, fitness_min, decomp, quotas, config.local_sigma,
                          problem.lower, problem.upper, t < T, rng);
      std::vector<std::vector<double>> next_pop;
      std::vector<std::vector<double>> next_f;
      next_pop.reserve(N);
      next_f.reserve(N);
      for (int idx : upd.survivors) {
        next_pop.push_back(canvas[idx]);
        next_f.push_back(canvas_f[idx]);
      }
      for (std::size_t r = 0; r < upd.refills.size(); ++r) {
        pending.push_back(static_cast<int>(next_pop.size()));
        next_pop.push_back(upd.refills[r]);
        next_f.push_back(std::vector<double>(problem.n_obj,
                                             std::numeric_limits<double>::quiet_NaN()));
      }
      if (static_cast<int>(next_pop.size()) != N)
        throw std::logic_error("population size drifted away from N");
      pop = std::move(next_pop);
      pop_f = std::move(next_f);
    } else {
      const std::vector<int> sel = basin_update_mo(obj_min, decomp, quotas, N);
      std::vector<std::vector<double>> next_pop;
      std::vector<std::vector<double>> next_f;
      next_pop.reserve(N);
      next_f.reserve(N);
      for (int idx : sel) {
        next_pop.push_back(canvas[idx]);
        next_f.push_back(canvas_f[idx]);
      }
      pop = std::move(next_pop);
      pop_f = std::move(next_f);
    }

    TraceRow row;
    row.generation = t;
    row.evaluations = evals;
    row.basin_count = decomp.basin_count;
    row.tau = tau_used;
    if (mode == Mode::so) {
      row.score = best_raw;
    } else {
      const std::vector<std::vector<double>> mv = [&] {
        std::vector<std::vector<double>> v(pop_f.size());
        for (std::size_t i = 0; i < pop_f.size(); ++i)
          v[i] = min_view_vector(problem, pop_f[i]);
        return v;
      }();
      const std::vector<int> ranks = fast_nondominated_sort(mv);
      row.score = static_cast<double>(std::count(ranks.begin(), ranks.end(), 1));
    }
    row.median_distance = median_pairwise_distance(pop);
    result.trace.push_back(row);

    if (config.record_decode) {
      DecodeSnapshot snap;
      snap.generation = t;
      snap.canvas = canvas;
      snap.heights = heights;
      snap.labels = decomp.labels;
      snap.is_representative.assign(n_canvas, 0);
      for (int rep : decomp.representatives) snap.is_representative[rep] = 1;
      result.snapshots.push_back(std::move(snap));
    }
  }

  result.population = std::move(pop);
  result.objectives = std::move(pop_f);
  result.archives = std::move(archives);
  result.evaluations = evals;
  return result;
}

}  // namespace clde
