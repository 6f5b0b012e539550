#pragma once

#include <vector>

#include "clde/decode.hpp"

namespace clde {

// Per-basin height contrast (representative minus lowest member) and
// member count.
struct BasinStats {
  std::vector<double> depth;
  std::vector<double> size;
};

BasinStats basin_stats(const BasinDecomposition& decomp, const std::vector<double>& heights);

// Convex mix of min-max normalized depth and size:
//   sal_k = beta * depth_norm_k + (1 - beta) * size_norm_k.
// A constant stat normalizes to all 0.5.
std::vector<double> saliency(const BasinStats& stats, double beta);

// Integer budget split: every basin gets quota_min plus a share of the
// remainder proportional to saliency, floored; leftover slots go to the
// largest fractional parts (ties by larger saliency, then lower id).
// When quota_min alone exceeds the budget, only the floor(total /
// quota_min) most salient basins are funded and the rest get zero.
// Always sums exactly to total.
std::vector<int> allocate_quotas(const std::vector<double>& sal, int total, int quota_min);

}  // namespace clde
