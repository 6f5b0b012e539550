#pragma once

#include <cstdint>
#include <vector>

#include "clde/rng.hpp"

namespace clde {

// Logistic-map driver for the variation operator: one z value per
// individual and dimension, advanced synchronously once per perturb call.
struct ChaoticState {
  std::vector<std::vector<double>> z;
  double mu = 4.0;
  double eta = 0.5;     // current multiplicative step size
  double alpha = 0.99;  // per-generation decay of eta
  double cr = 0.9;      // per-dimension perturbation probability
};

// Seed z uniformly in (0.05, 0.95); entries within 1e-6 of the fixed or
// eventually-fixed points {0, 0.25, 0.5, 0.75, 1} are resampled so no
// cell starts on a degenerate orbit.
ChaoticState make_chaotic_state(int rows, int dims, double mu, double eta0,
                                double alpha, double cr, Rng& rng);

// z <- mu * z * (1 - z), elementwise.
ChaoticState chaos_step(const ChaoticState& state);

struct PerturbResult {
  std::vector<std::vector<double>> candidates;
  ChaoticState state;
};

// One variation round: advance the map once, then perturb each
// individual. Dimension j of individual i changes when a uniform draw
// falls below cr or j is that individual's pivot dimension, using
//   x' = clip(x * (1 + eta * s)),  s = 2 z_ij - 1.
// Coordinates smaller than 1e-12 of the box width sidestep the
// multiplicative dead spot with an additive kick eta * s * 0.01 * width.
// eta decays by alpha after the whole population is processed. Draw
// order per individual: pivot index first, then one uniform per
// dimension (consumed even when the pivot forces the change).
PerturbResult perturb(const std::vector<std::vector<double>>& population,
                      const ChaoticState& state,
                      const std::vector<double>& lower,
                      const std::vector<double>& upper, Rng& rng);

struct BifurcationPoint {
  double mu = 0.0;
  double z = 0.0;
};

// Long-run behaviour of the bare map across a grid of mu values: iterate
// transient_steps from a seed-derived start, then record sample_steps
// iterates per mu. The same start value is reused for every mu.
std::vector<BifurcationPoint> bifurcation_scan(const std::vector<double>& mu_grid,
                                               int transient_steps, int sample_steps,
                                               std::uint64_t seed);

}  // namespace clde
