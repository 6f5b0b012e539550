#include "clde/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "clde/mo_select.hpp"

namespace clde {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path compression
      x = parent[x];
    }
    return x;
  }
  void unite(int child, int root) { parent[find(child)] = find(root); }
};

void check_heights(const NeighborGraph& graph, const std::vector<double>& heights) {
  if (graph.node_count <= 0) throw std::invalid_argument("decode: empty graph");
  if (static_cast<int>(heights.size()) != graph.node_count)
    throw std::invalid_argument("decode: heights size does not match the graph");
  for (double h : heights)
    if (!std::isfinite(h) || h < 0.0 || h > 1.0)
      throw std::invalid_argument("decode: heights must be finite in [0, 1]");
}

}  // namespace

BasinDecomposition decode_basins(const NeighborGraph& graph, const std::vector<double>& heights,
                                 double tau) {
  check_heights(graph, heights);
  if (std::isnan(tau) || tau < 0.0)
    throw std::invalid_argument("decode_basins: tau must be >= 0");

  const int n = graph.node_count;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (heights[a] != heights[b]) return heights[a] > heights[b];
    return a < b;
  });

  UnionFind uf(n);
  std::vector<int> rep(n, -1);  // representative node per root
  std::vector<char> active(n, 0);

  for (int i : order) {
    // highest active neighbour, ties by lower id
    int best = -1;
    for (int j : graph.adjacency[i]) {
      if (!active[j]) continue;
      if (best == -1 || heights[j] > heights[best] || (heights[j] == heights[best] && j < best))
        best = j;
    }
    if (best == -1) {
      rep[i] = i;  // opens a basin
    } else {
      uf.unite(i, best);
      for (int j : graph.adjacency[i]) {
        if (!active[j]) continue;
        int e = uf.find(j);
        int eg = uf.find(i);
        if (e == eg) continue;
        const double weaker = std::min(heights[rep[e]], heights[rep[eg]]);
        if (weaker < heights[i] + tau) {
          // keep the higher representative, ties by lower node id
          int keep = rep[e];
          if (heights[rep[eg]] > heights[keep] ||
              (heights[rep[eg]] == heights[keep] && rep[eg] < keep))
            keep = rep[eg];
          uf.unite(e, eg);
          rep[uf.find(eg)] = keep;
        }
      }
    }
    active[i] = 1;
  }

  // canonical ids: descending representative height, ties by lower rep id
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) roots.push_back(v);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    if (heights[rep[a]] != heights[rep[b]]) return heights[rep[a]] > heights[rep[b]];
    return rep[a] < rep[b];
  });

  BasinDecomposition d;
  d.basin_count = static_cast<int>(roots.size());
  d.labels.assign(n, -1);
  d.representatives.resize(d.basin_count);
  d.members.assign(d.basin_count, {});
  std::vector<int> id_of_root(n, -1);
  for (int b = 0; b < d.basin_count; ++b) {
    id_of_root[roots[b]] = b;
    d.representatives[b] = rep[roots[b]];
  }
  for (int v = 0; v < n; ++v) {
    int b = id_of_root[uf.find(v)];
    d.labels[v] = b;
    d.members[b].push_back(v);
  }
  return d;
}

PersistenceController adapt_tau(const PersistenceController& ctrl, int basin_count) {
  if (basin_count < 1) throw std::invalid_argument("adapt_tau: basin_count must be >= 1");
  if (ctrl.k_target < 1) throw std::invalid_argument("adapt_tau: k_target must be >= 1");
  if (!(ctrl.tau_min > 0.0) || !(ctrl.tau_min <= ctrl.tau_max))
    throw std::invalid_argument("adapt_tau: need 0 < tau_min <= tau_max");
  if (!std::isfinite(ctrl.gamma) || ctrl.gamma < 0.0)
    throw std::invalid_argument("adapt_tau: gamma must be >= 0");

  PersistenceController next = ctrl;
  const double drive =
      ctrl.gamma * (static_cast<double>(basin_count) - ctrl.k_target) / ctrl.k_target;
  next.tau = std::clamp(ctrl.tau * std::exp(drive), ctrl.tau_min, ctrl.tau_max);
  return next;
}

std::vector<double> rank_crowding_height(const std::vector<std::vector<double>>& objectives,
                                         double kappa) {
  if (!std::isfinite(kappa) || kappa < 0.0)
    throw std::invalid_argument("rank_crowding_height: kappa must be >= 0");
  const std::vector<int> rank = fast_nondominated_sort(objectives);
  const int n = static_cast<int>(objectives.size());
  const int max_rank = *std::max_element(rank.begin(), rank.end());

  std::vector<std::vector<int>> fronts(max_rank);
  for (int i = 0; i < n; ++i) fronts[rank[i] - 1].push_back(i);

  std::vector<double> crowd(n, 0.0);
  std::vector<char> maximal(n, 0);
  for (const auto& front : fronts) {
    const FrontCrowding cd = crowding_distance(objectives, front);
    for (std::size_t p = 0; p < front.size(); ++p) {
      crowd[front[p]] = cd.value[p];
      maximal[front[p]] = cd.maximal[p];
    }
  }
  // boundary members adopt the largest finite crowding on the canvas
  double max_finite = 0.0;
  bool any_finite = false;
  for (int i = 0; i < n; ++i)
    if (!maximal[i]) {
      max_finite = any_finite ? std::max(max_finite, crowd[i]) : crowd[i];
      any_finite = true;
    }
  for (int i = 0; i < n; ++i)
    if (maximal[i]) crowd[i] = any_finite ? max_finite : 0.0;

  const double eps = 1e-12;
  double cmin = *std::min_element(crowd.begin(), crowd.end());
  double cmax = *std::max_element(crowd.begin(), crowd.end());
  std::vector<double> q(n);
  for (int i = 0; i < n; ++i) {
    const double cbar = (crowd[i] - cmin) / (cmax - cmin + eps);
    q[i] = (max_rank - rank[i]) / (max_rank - 1.0 + eps) + kappa * cbar;
  }
  return q;
}

std::vector<int> cc_oracle(const NeighborGraph& graph, const std::vector<double>& heights,
                           double lambda) {
  check_heights(graph, heights);
  if (std::isnan(lambda)) throw std::invalid_argument("cc_oracle: lambda is NaN");

  const int n = graph.node_count;
  std::vector<int> label(n, -1);
  int next_id = 0;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (heights[s] < lambda || label[s] != -1) continue;
    label[s] = next_id;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : graph.adjacency[v])
        if (heights[w] >= lambda && label[w] == -1) {
          label[w] = next_id;
          queue.push_back(w);
        }
    }
    ++next_id;
  }
  return label;
}

}  // namespace clde
