#pragma once

#include <json.hpp>

#include "modkit/duality.hpp"
#include "modkit/families.hpp"
#include "modkit/probability.hpp"
#include "modkit/solver.hpp"

namespace modkit {

/// {"u-v": value, ...} in edge order.
nlohmann::json edge_map(const Graph& g, const EdgeVector& values);

/// {modulus, p, rho, active, lambda, iterations, tolerance}
nlohmann::json to_json(const Graph& g, const ModulusResult& r);

/// Same fields as a ModulusResult, rho being the fec extremal density and
/// active/lambda those of the underlying star solve, plus sigma_hat,
/// eta_star, dual_modulus, q and product_deviation.
nlohmann::json to_json(const Graph& g, const DualResult& r);

/// {objects: [{label, mass}], expected_usage: {edge: value}}
nlohmann::json to_json(const Graph& g, const Pmf& pmf, const EdgeVector& usage);

/// [{label, usage}] per minimal edge cover.
nlohmann::json min_covers_to_json(const Graph& g, const std::vector<EdgeSet>& covers);

/// [{label, usage, components: [{kind, vertices}]}] per basic fractional
/// edge cover.
nlohmann::json basic_fecs_to_json(const Graph& g, const std::vector<BasicFec>& fecs);

}  // namespace modkit
