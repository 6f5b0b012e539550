#include "clde/mo_select.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clde {

namespace {

void check_objectives(const std::vector<std::vector<double>>& objs) {
  if (objs.empty()) throw std::invalid_argument("mo_select: empty objective set");
  const std::size_t m = objs[0].size();
  if (m == 0) throw std::invalid_argument("mo_select: zero objectives");
  for (const auto& row : objs) {
    if (row.size() != m) throw std::invalid_argument("mo_select: inconsistent objective counts");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("mo_select: non-finite objective");
  }
}

}  // namespace

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("dominates: mismatched objective vectors");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& objectives) {
  check_objectives(objectives);
  const int n = static_cast<int>(objectives.size());
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> dom_count(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j])) {
        dominated[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(objectives[j], objectives[i])) {
        dominated[j].push_back(i);
        ++dom_count[i];
      }
    }
  std::vector<int> rank(n, 0);
  std::vector<int> current;
  for (int i = 0; i < n; ++i)
    if (dom_count[i] == 0) {
      rank[i] = 1;
      current.push_back(i);
    }
  int level = 1;
  while (!current.empty()) {
    std::vector<int> next;
    for (int i : current)
      for (int j : dominated[i])
        if (--dom_count[j] == 0) {
          rank[j] = level + 1;
          next.push_back(j);
        }
    ++level;
    current = std::move(next);
  }
  return rank;
}

FrontCrowding crowding_distance(const std::vector<std::vector<double>>& objectives,
                                const std::vector<int>& front) {
  check_objectives(objectives);
  if (front.empty()) throw std::invalid_argument("crowding_distance: empty front");
  const int n = static_cast<int>(objectives.size());
  for (int idx : front)
    if (idx < 0 || idx >= n) throw std::invalid_argument("crowding_distance: index out of range");

  const std::size_t fsize = front.size();
  const std::size_t m = objectives[0].size();
  FrontCrowding out;
  out.value.assign(fsize, 0.0);
  out.maximal.assign(fsize, 0);

  std::vector<int> order(fsize);
  for (std::size_t obj = 0; obj < m; ++obj) {
    for (std::size_t i = 0; i < fsize; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return objectives[front[a]][obj] < objectives[front[b]][obj];
    });
    out.maximal[order.front()] = 1;
    out.maximal[order.back()] = 1;
    const double span =
        objectives[front[order.back()]][obj] - objectives[front[order.front()]][obj];
    if (span <= 0.0) continue;  // flat objective adds nothing
    for (std::size_t p = 1; p + 1 < fsize; ++p) {
      const double gap = objectives[front[order[p + 1]]][obj] -
                         objectives[front[order[p - 1]]][obj];
      out.value[order[p]] += gap / span;
    }
  }
  return out;
}

std::vector<int> select_n(const std::vector<std::vector<double>>& objectives, int n) {
  check_objectives(objectives);
  const int pop = static_cast<int>(objectives.size());
  if (n < 1 || n > pop)
    throw std::invalid_argument("select_n: n must lie in [1, population size]");

  const std::vector<int> rank = fast_nondominated_sort(objectives);
  const int max_rank = *std::max_element(rank.begin(), rank.end());
  std::vector<std::vector<int>> fronts(max_rank);
  for (int i = 0; i < pop; ++i) fronts[rank[i] - 1].push_back(i);

  std::vector<int> selected;
  selected.reserve(n);
  for (const auto& front : fronts) {
    const int room = n - static_cast<int>(selected.size());
    if (room <= 0) break;
    if (static_cast<int>(front.size()) <= room) {
      selected.insert(selected.end(), front.begin(), front.end());
      continue;
    }
    // splitting front: maximal crowding first, then larger value, then index
    const FrontCrowding cd = crowding_distance(objectives, front);
    std::vector<int> pos(front.size());
    for (std::size_t i = 0; i < front.size(); ++i) pos[i] = static_cast<int>(i);
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
      if (cd.maximal[a] != cd.maximal[b]) return cd.maximal[a] > cd.maximal[b];
      if (!cd.maximal[a] && cd.value[a] != cd.value[b]) return cd.value[a] > cd.value[b];
      return front[a] < front[b];
    });
    for (int i = 0; i < room; ++i) selected.push_back(front[pos[i]]);
  }
  return selected;
}

}  // namespace clde
