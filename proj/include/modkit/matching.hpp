#pragma once

#include "modkit/graph.hpp"

namespace modkit {

/// A set of pairwise vertex-disjoint edges and its weight under the
/// query weights.
struct Matching {
  EdgeSet edges;
  double weight = 0.0;
};

/// Absolute tolerance, relative to max(1, max weight), on the blossom
/// algorithm's dual certificate.
inline constexpr double kMatchingCertificateTolerance = 1e-9;

/// Exact minimum-weight perfect matching (blossom algorithm, O(|V|^3)).
///
/// Requires w >= 0 entrywise (DomainError otherwise). Throws Infeasible when
/// |V| is odd or the graph has no perfect matching, and SolverError if the
/// optimality certificate fails to check.
Matching min_weight_perfect_matching(const Graph& g, const EdgeVector& w);

/// Exhaustive minimum-weight perfect matching for |V| <= 12. Among optimal
/// matchings (weights equal within 1e-12) the lexicographically smallest
/// edge-index set wins.
Matching brute_force_mwpm(const Graph& g, const EdgeVector& w);

/// Minimum-weight edge cover through a perfect-matching reduction.
///
/// The auxiliary graph holds two copies of G plus, for each vertex v, a
/// cross edge (v, v') of weight 2 * min_{e in star(v)} w(e). Edges matched
/// inside the first copy enter the cover; a vertex matched across takes its
/// cheapest incident edge (lowest index on ties). The cover weight equals
/// half the auxiliary matching weight.
///
/// Throws Infeasible if G has an isolated vertex.
EdgeSet min_weight_edge_cover(const Graph& g, const EdgeVector& w);

/// Sum of w over the set.
double set_weight(const EdgeSet& set, const EdgeVector& w);

/// True iff every vertex meets at least one member edge.
bool is_edge_cover(const Graph& g, const EdgeSet& set);

}  // namespace modkit
