#pragma once

#include <vector>

namespace clde {

// Pareto dominance for minimization: a is no worse everywhere and
// strictly better somewhere.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

// 1-based nondomination ranks via front peeling (O(m n^2)).
std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& objectives);

// Crowding of one front, parallel to `front`. Boundary members (first or
// last in any objective's ordering) carry an explicit maximal flag
// instead of a floating-point infinity; `value` is only meaningful for
// non-maximal members. Objectives with zero spread contribute nothing.
struct FrontCrowding {
  std::vector<double> value;
  std::vector<char> maximal;
};

FrontCrowding crowding_distance(const std::vector<std::vector<double>>& objectives,
                                const std::vector<int>& front);

// Survivor selection: whole fronts in rank order, the splitting front
// truncated by descending crowding (maximal first, ties by lower index).
// Returns the selected row indices.
std::vector<int> select_n(const std::vector<std::vector<double>>& objectives, int n);

}  // namespace clde
