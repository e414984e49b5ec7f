#pragma once

#include "modkit/families.hpp"

namespace modkit {

/// Fractional edge covers with an exact shortest oracle: a minimum-weight
/// fractional cover of G is half a minimum-weight edge cover of its
/// bipartite double cover, whose cover polytope is integral. Returned rows
/// take values in {0, 1/2, 1}.
///
/// Used to cross-check the duality route. compute never calls it.
FamilyOracle reference_fec_family(const Graph& g);

/// Minimum rho-length over all fractional edge covers, with a minimizer.
ShortestObject min_weight_fractional_edge_cover(const Graph& g, const EdgeVector& rho);

}  // namespace modkit
