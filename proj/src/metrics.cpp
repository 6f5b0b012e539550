#include "clde/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace clde {

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("metrics: mismatched point dimensions");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double d = a[j] - b[j];
    s += d * d;
  }
  return std::sqrt(s);
}

void check_points(const std::vector<std::vector<double>>& pts, const char* what) {
  if (pts.empty()) throw std::invalid_argument(std::string("metrics: empty ") + what);
  for (const auto& p : pts) {
    if (p.empty() || p.size() != pts[0].size())
      throw std::invalid_argument(std::string("metrics: inconsistent ") + what);
    for (double v : p)
      if (!std::isfinite(v))
        throw std::invalid_argument(std::string("metrics: non-finite ") + what);
  }
}

}  // namespace

double peak_ratio(const std::vector<std::vector<std::vector<double>>>& runs,
                  const std::vector<std::vector<double>>& optima, double epsilon) {
  if (runs.empty()) throw std::invalid_argument("peak_ratio: no runs");
  check_points(optima, "optima");
  if (!(epsilon > 0.0)) throw std::invalid_argument("peak_ratio: epsilon must be > 0");

  long long matched = 0;
  for (const auto& sols : runs) {
    if (sols.empty()) continue;  // a run may come up empty-handed
    check_points(sols, "solutions");
    std::vector<std::tuple<double, int, int>> pairs;
    for (int oi = 0; oi < static_cast<int>(optima.size()); ++oi)
      for (int si = 0; si < static_cast<int>(sols.size()); ++si) {
        double d = dist(optima[oi], sols[si]);
        if (d <= epsilon) pairs.emplace_back(d, oi, si);
      }
    std::sort(pairs.begin(), pairs.end());
    std::vector<char> opt_used(optima.size(), 0), sol_used(sols.size(), 0);
    for (const auto& [d, oi, si] : pairs) {
      (void)d;
      if (opt_used[oi] || sol_used[si]) continue;
      opt_used[oi] = sol_used[si] = 1;
      ++matched;
    }
  }
  return static_cast<double>(matched) /
         (static_cast<double>(optima.size()) * static_cast<double>(runs.size()));
}

double igd(const std::vector<std::vector<double>>& approx,
           const std::vector<std::vector<double>>& reference) {
  check_points(approx, "approximation");
  check_points(reference, "reference");
  double sum = 0.0;
  for (const auto& r : reference) {
    double best = dist(r, approx[0]);
    for (std::size_t i = 1; i < approx.size(); ++i) best = std::min(best, dist(r, approx[i]));
    sum += best;
  }
  return sum / static_cast<double>(reference.size());
}

double igdx(const std::vector<std::vector<double>>& approx_decision,
            const std::vector<std::vector<double>>& reference_set) {
  return igd(approx_decision, reference_set);
}

double median_pairwise_distance(const std::vector<std::vector<double>>& points) {
  check_points(points, "points");
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("median_pairwise_distance: need at least 2 points");
  std::vector<double> ds;
  ds.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ds.push_back(dist(points[i], points[j]));
  std::sort(ds.begin(), ds.end());
  const std::size_t m = ds.size();
  if (m % 2 == 1) return ds[m / 2];
  return 0.5 * (ds[m / 2 - 1] + ds[m / 2]);
}

}  // namespace clde
