#pragma once

#include <vector>

namespace modkit::detail {

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

struct BlossomResult {
  /// mate[v] is the vertex matched to v, or -1.
  std::vector<int> mate;
  /// Largest violation found while re-checking the dual certificate.
  double certificate_error = 0.0;
};

/// Maximum-weight matching in a general graph by Edmonds' primal-dual
/// blossom method, O(n^3). With max_cardinality the matching has maximum
/// size and maximum weight among such matchings.
///
/// Vertices are 0..num_vertices-1; parallel edges are not allowed. The
/// returned certificate_error is the worst violation of dual feasibility,
/// tightness of matched edges, and blossom fullness, in weight units.
BlossomResult max_weight_matching(int num_vertices,
                                  const std::vector<WeightedEdge>& edges,
                                  bool max_cardinality);

}  // namespace modkit::detail
