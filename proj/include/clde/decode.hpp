#pragma once

#include <vector>

#include "clde/graph.hpp"

namespace clde {

// Partition of the canvas into basins of attraction of the height
// function. Basin ids are canonical: sorted by descending representative
// height, ties by lower representative node id.
struct BasinDecomposition {
  std::vector<int> labels;                // basin id per node
  std::vector<int> representatives;       // highest node of each basin
  std::vector<std::vector<int>> members;  // node ids per basin, ascending
  int basin_count = 0;
};

// Persistence-gated watershed over the superlevel filtration: nodes are
// processed by descending height (ties by ascending id); a node with no
// active neighbour opens a basin, otherwise it joins the basin of its
// highest active neighbour (ties by lower id) and each other incident
// basin e merges into that basin iff
//   min(h(rep(e)), h(rep(joined))) < h(node) + tau,
// keeping the higher representative (ties by lower id). Heights must lie
// in [0, 1]; any tau >= height range disables the gate, giving plain
// connected components.
BasinDecomposition decode_basins(const NeighborGraph& graph,
                                 const std::vector<double>& heights, double tau);

// Feedback controller steering the decoded basin count toward k_target
// by widening or narrowing the merge gate.
struct PersistenceController {
  double tau = 0.10;
  double tau_min = 0.02;
  double tau_max = 0.30;
  double gamma = 0.20;
  int k_target = 10;
};

// tau' = clip(tau * exp(gamma * (K - k_target) / k_target)).
PersistenceController adapt_tau(const PersistenceController& ctrl, int basin_count);

// Scalar canvas heights for multi-objective decoding: a nondomination
// rank term plus kappa times min-max normalized crowding, where boundary
// crowding is replaced by the largest finite crowding on the canvas.
std::vector<double> rank_crowding_height(const std::vector<std::vector<double>>& objectives,
                                         double kappa);

// Connected components of the superlevel set {h >= lambda}; nodes below
// lambda get label -1. Ids count up in discovery order of each
// component's lowest node.
std::vector<int> cc_oracle(const NeighborGraph& graph, const std::vector<double>& heights,
                           double lambda);

}  // namespace clde
