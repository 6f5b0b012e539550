#pragma once

#include <vector>

namespace clde {

// Undirected k-nearest-neighbour graph. Adjacency lists are sorted
// ascending and free of self loops. Edges are the union of both
// endpoints' k-NN picks, so every node has degree >= min(k, n-1).
struct NeighborGraph {
  int node_count = 0;
  int k = 0;
  std::vector<std::vector<int>> adjacency;
};

// Exact brute-force construction. k is clipped to n-1; equal distances
// are broken by lower node index.
NeighborGraph knn_graph(const std::vector<std::vector<double>>& points, int k);

// Affine rescale of raw scores onto [0, 1]. A constant input maps to
// all 0.5; order is preserved otherwise.
std::vector<double> normalize_heights(const std::vector<double>& values);

}  // namespace clde
