#include "modkit/json_io.hpp"

namespace modkit {

using nlohmann::json;

json edge_map(const Graph& g, const EdgeVector& values) {
  json out = json::object();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out[g.edge_label(static_cast<EdgeIndex>(e))] = values[e];
  }
  return out;
}

namespace {

json labels(const std::vector<UsageRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r.label);
  return out;
}

}  // namespace

json to_json(const Graph& g, const ModulusResult& r) {
  return {{"modulus", r.modulus},
          {"p", r.p},
          {"rho", edge_map(g, r.rho_star)},
          {"active", labels(r.active_rows)},
          {"lambda", r.lambda},
          {"iterations", r.iterations},
          {"tolerance", r.tolerance_used}};
}

json to_json(const Graph& g, const DualResult& r) {
  return {{"modulus", r.primal_modulus},
          {"p", r.p},
          {"rho", edge_map(g, r.eta_star)},
          {"active", labels(r.star_result.active_rows)},
          {"lambda", r.star_result.lambda},
          {"iterations", r.star_result.iterations},
          {"tolerance", r.star_result.tolerance_used},
          {"q", r.q},
          {"dual_modulus", r.dual_modulus},
          {"sigma_hat", edge_map(g, r.sigma_hat)},
          {"eta_star", edge_map(g, r.eta_star)},
          {"product_deviation", r.product_deviation}};
}

json to_json(const Graph& g, const Pmf& pmf, const EdgeVector& usage) {
  json objects = json::array();
  for (std::size_t i = 0; i < pmf.labels.size(); ++i) {
    objects.push_back({{"label", pmf.labels[i]}, {"mass", pmf.mass[i]}});
  }
  return {{"objects", objects}, {"expected_usage", edge_map(g, usage)}};
}

json min_covers_to_json(const Graph& g, const std::vector<EdgeSet>& covers) {
  json out = json::array();
  for (const auto& c : covers) {
    UsageRow row = edge_set_row(g, c);
    out.push_back({{"label", row.label}, {"usage", row.usage}});
  }
  return out;
}

json basic_fecs_to_json(const Graph& g, const std::vector<BasicFec>& fecs) {
  json out = json::array();
  for (const auto& f : fecs) {
    json comps = json::array();
    for (const auto& c : f.components) {
      json names = json::array();
      for (VertexIndex v : c.vertices) names.push_back(g.name(v));
      comps.push_back({{"kind", c.kind == FecComponent::Kind::Substar ? "substar" : "odd_cycle"},
                       {"vertices", names}});
    }
    out.push_back({{"label", vector_label(f.usage)}, {"usage", f.usage}, {"components", comps}});
  }
  return out;
}

}  // namespace modkit
