#include "clde/saliency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace clde {

namespace {

std::vector<double> minmax_or_half(const std::vector<double>& v) {
  double lo = *std::min_element(v.begin(), v.end());
  double hi = *std::max_element(v.begin(), v.end());
  std::vector<double> out(v.size(), 0.5);
  if (hi > lo)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - lo) / (hi - lo);
  return out;
}

}  // namespace

BasinStats basin_stats(const BasinDecomposition& decomp, const std::vector<double>& heights) {
  if (decomp.basin_count < 1) throw std::invalid_argument("basin_stats: empty decomposition");
  BasinStats st;
  st.depth.resize(decomp.basin_count);
  st.size.resize(decomp.basin_count);
  for (int b = 0; b < decomp.basin_count; ++b) {
    const auto& mem = decomp.members[b];
    if (mem.empty()) throw std::invalid_argument("basin_stats: basin without members");
    double lo = heights.at(mem[0]);
    for (int v : mem) lo = std::min(lo, heights.at(v));
    st.depth[b] = heights.at(decomp.representatives[b]) - lo;
    st.size[b] = static_cast<double>(mem.size());
  }
  return st;
}

std::vector<double> saliency(const BasinStats& stats, double beta) {
  if (stats.depth.empty() || stats.depth.size() != stats.size.size())
    throw std::invalid_argument("saliency: malformed stats");
  if (!(beta >= 0.0) || beta > 1.0)
    throw std::invalid_argument("saliency: beta must lie in [0, 1]");
  for (std::size_t i = 0; i < stats.depth.size(); ++i)
    if (!std::isfinite(stats.depth[i]) || !std::isfinite(stats.size[i]))
      throw std::invalid_argument("saliency: non-finite stat");

  const std::vector<double> dn = minmax_or_half(stats.depth);
  const std::vector<double> sn = minmax_or_half(stats.size);
  std::vector<double> sal(dn.size());
  for (std::size_t i = 0; i < sal.size(); ++i) sal[i] = beta * dn[i] + (1.0 - beta) * sn[i];
  return sal;
}

std::vector<int> allocate_quotas(const std::vector<double>& sal, int total, int quota_min) {
  if (sal.empty()) throw std::invalid_argument("allocate_quotas: empty saliency");
  for (double s : sal)
    if (!std::isfinite(s) || s < 0.0)
      throw std::invalid_argument("allocate_quotas: saliency must be finite and >= 0");
  if (total < 1) throw std::invalid_argument("allocate_quotas: total must be >= 1");
  if (quota_min < 1) throw std::invalid_argument("allocate_quotas: quota_min must be >= 1");
  if (total < quota_min)
    throw std::invalid_argument("allocate_quotas: total below the per-basin floor");

  const int k = static_cast<int>(sal.size());

  // degenerate: floors alone exceed the budget, fund only the most salient
  if (static_cast<long long>(k) * quota_min > total) {
    const int funded = total / quota_min;
    std::vector<int> by_sal(k);
    std::iota(by_sal.begin(), by_sal.end(), 0);
    std::sort(by_sal.begin(), by_sal.end(), [&](int a, int b) {
      if (sal[a] != sal[b]) return sal[a] > sal[b];
      return a < b;
    });
    std::vector<int> quotas(k, 0);
    if (funded > 0) {
      std::vector<double> sub(funded);
      for (int i = 0; i < funded; ++i) sub[i] = sal[by_sal[i]];
      const std::vector<int> q = allocate_quotas(sub, total, quota_min);
      for (int i = 0; i < funded; ++i) quotas[by_sal[i]] = q[i];
    }
    return quotas;
  }

  const double eps = 1e-12;
  const double sal_sum = std::accumulate(sal.begin(), sal.end(), 0.0);
  const double pool = static_cast<double>(total) - static_cast<double>(k) * quota_min;
  std::vector<double> real(k);
  std::vector<int> quotas(k);
  for (int i = 0; i < k; ++i) {
    real[i] = quota_min + pool * sal[i] / (sal_sum + eps);
    quotas[i] = static_cast<int>(std::floor(real[i]));
    if (quotas[i] < quota_min) quotas[i] = quota_min;
  }

  long long assigned = std::accumulate(quotas.begin(), quotas.end(), 0LL);
  long long residual = total - assigned;

  std::vector<int> prio(k);
  std::iota(prio.begin(), prio.end(), 0);
  if (residual > 0) {
    // largest fractional part first, ties by larger saliency, then lower id
    std::sort(prio.begin(), prio.end(), [&](int a, int b) {
      const double fa = real[a] - std::floor(real[a]);
      const double fb = real[b] - std::floor(real[b]);
      if (fa != fb) return fa > fb;
      if (sal[a] != sal[b]) return sal[a] > sal[b];
      return a < b;
    });
    for (long long r = 0; r < residual; ++r) ++quotas[prio[r % k]];
  } else if (residual < 0) {
    // smallest fractional part first, ties by smaller saliency, then lower id
    std::sort(prio.begin(), prio.end(), [&](int a, int b) {
      const double fa = real[a] - std::floor(real[a]);
      const double fb = real[b] - std::floor(real[b]);
      if (fa != fb) return fa < fb;
      if (sal[a] != sal[b]) return sal[a] < sal[b];
      return a < b;
    });
    long long need = -residual;
    while (need > 0) {
      bool moved = false;
      for (int i = 0; i < k && need > 0; ++i)
        if (quotas[prio[i]] > quota_min) {
          --quotas[prio[i]];
          --need;
          moved = true;
        }
      if (!moved) break;  // floors everywhere, handled by the degenerate branch
    }
  }
  return quotas;
}

}  // namespace clde
