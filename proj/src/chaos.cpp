#include "clde/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clde {

namespace {

void check_mu(double mu) {
  if (!(mu > 0.0) || mu > 4.0)
    throw std::invalid_argument("chaos: mu must lie in (0, 4]");
}

bool near_degenerate(double z) {
  static const double fixed[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (double f : fixed)
    if (std::fabs(z - f) < 1e-6) return true;
  return false;
}

}  // namespace

ChaoticState make_chaotic_state(int rows, int dims, double mu, double eta0, double alpha,
                                double cr, Rng& rng) {
  if (rows < 1 || dims < 1)
    throw std::invalid_argument("make_chaotic_state: rows and dims must be >= 1");
  check_mu(mu);
  if (!(eta0 >= 0.0) || !std::isfinite(eta0))
    throw std::invalid_argument("make_chaotic_state: eta0 must be >= 0");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("make_chaotic_state: alpha must lie in (0, 1]");
  if (!(cr >= 0.0) || cr > 1.0)
    throw std::invalid_argument("make_chaotic_state: cr must lie in [0, 1]");

  ChaoticState s;
  s.mu = mu;
  s.eta = eta0;
  s.alpha = alpha;
  s.cr = cr;
  s.z.assign(rows, std::vector<double>(dims));
  for (auto& row : s.z)
    for (auto& cell : row) {
      do {
        cell = rng.uniform(0.05, 0.95);
      } while (near_degenerate(cell));
    }
  return s;
}

ChaoticState chaos_step(const ChaoticState& state) {
  check_mu(state.mu);
  ChaoticState next = state;
  for (auto& row : next.z)
    for (auto& cell : row) {
      if (!(cell >= 0.0) || cell > 1.0)
        throw std::invalid_argument("chaos_step: z outside [0, 1]");
      cell = state.mu * cell * (1.0 - cell);
    }
  return next;
}

PerturbResult perturb(const std::vector<std::vector<double>>& population,
                      const ChaoticState& state, const std::vector<double>& lower,
                      const std::vector<double>& upper, Rng& rng) {
  if (population.empty()) throw std::invalid_argument("perturb: empty population");
  const std::size_t n = population.size();
  const std::size_t d = population[0].size();
  if (d == 0) throw std::invalid_argument("perturb: zero-dimensional individuals");
  if (state.z.size() != n || state.z[0].size() != d)
    throw std::invalid_argument("perturb: state shape does not match the population");
  if (lower.size() != d || upper.size() != d)
    throw std::invalid_argument("perturb: bounds shape does not match the population");
  for (std::size_t j = 0; j < d; ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]) || !(lower[j] < upper[j]))
      throw std::invalid_argument("perturb: bounds must be finite with lower < upper");
  }
  for (const auto& row : population) {
    if (row.size() != d) throw std::invalid_argument("perturb: inconsistent dimensions");
    for (std::size_t j = 0; j < d; ++j)
      if (!std::isfinite(row[j]) || row[j] < lower[j] || row[j] > upper[j])
        throw std::invalid_argument("perturb: population member out of bounds");
  }

  PerturbResult out;
  out.state = chaos_step(state);
  const double eta = out.state.eta;
  out.candidates.assign(n, std::vector<double>(d));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pivot = rng.uniform_int(d);
    for (std::size_t j = 0; j < d; ++j) {
      const bool hit = rng.uniform() < out.state.cr;  // draw consumed every dimension
      double x = population[i][j];
      if (hit || j == pivot) {
        const double s = 2.0 * out.state.z[i][j] - 1.0;
        const double width = upper[j] - lower[j];
        double cand;
        if (std::fabs(x) < 1e-12 * width)
          cand = x + eta * s * 0.01 * width;  // escape the multiplicative dead spot
        else
          cand = x * (1.0 + eta * s);
        x = std::clamp(cand, lower[j], upper[j]);
      }
      out.candidates[i][j] = x;
    }
  }
  out.state.eta = eta * out.state.alpha;
  return out;
}

std::vector<BifurcationPoint> bifurcation_scan(const std::vector<double>& mu_grid,
                                               int transient_steps, int sample_steps,
                                               std::uint64_t seed) {
  if (mu_grid.empty()) throw std::invalid_argument("bifurcation_scan: empty mu grid");
  for (double mu : mu_grid) check_mu(mu);
  if (transient_steps < 1)
    throw std::invalid_argument("bifurcation_scan: transient_steps must be >= 1");
  if (sample_steps < 1) throw std::invalid_argument("bifurcation_scan: sample_steps must be >= 1");

  Rng rng(seed);
  double z0;
  do {
    z0 = rng.uniform(0.05, 0.95);
  } while (near_degenerate(z0));

  std::vector<BifurcationPoint> out;
  out.reserve(mu_grid.size() * static_cast<std::size_t>(sample_steps));
  for (double mu : mu_grid) {
    double z = z0;
    for (int t = 0; t < transient_steps; ++t) z = mu * z * (1.0 - z);
    for (int t = 0; t < sample_steps; ++t) {
      z = mu * z * (1.0 - z);
      out.push_back({mu, z});
    }
  }
  return out;
}

}  // namespace clde
