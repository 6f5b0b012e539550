#pragma once

#include <vector>

namespace clde {

// Fraction of catalogued optima matched across runs: per run, candidate
// pairs within epsilon are matched greedily one-to-one by ascending
// distance (ties by optimum id, then solution id); the metric is
// total matches / (optima * runs).
double peak_ratio(const std::vector<std::vector<std::vector<double>>>& runs,
                  const std::vector<std::vector<double>>& optima, double epsilon);

// Mean over reference points of the distance to the nearest approximation
// point, in objective space.
double igd(const std::vector<std::vector<double>>& approx,
           const std::vector<std::vector<double>>& reference);

// Same averaging in decision space, against a reference Pareto set.
double igdx(const std::vector<std::vector<double>>& approx_decision,
            const std::vector<std::vector<double>>& reference_set);

// Median of all n(n-1)/2 pairwise Euclidean distances; even counts
// average the two middle values.
double median_pairwise_distance(const std::vector<std::vector<double>>& points);

}  // namespace clde
