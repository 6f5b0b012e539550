#include "clde/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace clde {

namespace {

double sqdist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

}  // namespace

NeighborGraph knn_graph(const std::vector<std::vector<double>>& points, int k) {
  if (points.empty()) throw std::invalid_argument("knn_graph: empty point set");
  if (k < 1) throw std::invalid_argument("knn_graph: k must be >= 1");
  const int n = static_cast<int>(points.size());
  const std::size_t dim = points[0].size();
  if (dim == 0) throw std::invalid_argument("knn_graph: zero-dimensional points");
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("knn_graph: inconsistent dimensions");
    for (double v : p)
      if (!std::isfinite(v)) throw std::invalid_argument("knn_graph: non-finite coordinate");
  }

  const int kk = std::min(k, n - 1);
  NeighborGraph g;
  g.node_count = n;
  g.k = kk;
  g.adjacency.assign(n, {});

  // squared distances keep the ordering; ties resolve to the lower index
  std::vector<std::pair<double, int>> order(n - 1 > 0 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) {
    order.clear();
    for (int j = 0; j < n; ++j)
      if (j != i) order.emplace_back(sqdist(points[i], points[j]), j);
    std::sort(order.begin(), order.end());
    for (int t = 0; t < kk; ++t) {
      int j = order[t].second;
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(i);  // union symmetrization
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

std::vector<double> normalize_heights(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("normalize_heights: empty input");
  double lo = values[0], hi = values[0];
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("normalize_heights: non-finite value");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::vector<double> out(values.size());
  if (hi == lo) {
    std::fill(out.begin(), out.end(), 0.5);
    return out;
  }
  const double span = hi - lo;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / span;
  return out;
}

}  // namespace clde
