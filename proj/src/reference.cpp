#include "modkit/reference.hpp"

#include "modkit/errors.hpp"
#include "modkit/matching.hpp"

namespace modkit {

namespace {

Graph double_cover(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::string> names;
  for (const auto& v : g.vertex_names()) names.push_back(v + "/1");
  for (const auto& v : g.vertex_names()) names.push_back(v + "/2");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, n + e.v});
    edges.push_back({e.v, n + e.u});
  }
  return Graph(std::move(names), std::move(edges), EdgeVector(edges.size(), 1.0));
}

}  // namespace

ShortestObject min_weight_fractional_edge_cover(const Graph& g, const EdgeVector& rho) {
  if (rho.size() != g.num_edges()) throw DomainError("density does not match graph");
  Graph h = double_cover(g);
  EdgeVector w(h.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) w[2 * e] = w[2 * e + 1] = rho[e];
  EdgeSet cover = min_weight_edge_cover(h, w);
  EdgeVector gamma(g.num_edges(), 0.0);
  for (EdgeIndex f : cover) gamma[f / 2] += 0.5;
  ShortestObject out{{gamma, vector_label(gamma)}, 0.0};
  for (std::size_t e = 0; e < g.num_edges(); ++e) out.length += gamma[e] * rho[e];
  return out;
}

FamilyOracle reference_fec_family(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw Infeasible("graph has an isolated vertex; no fractional edge cover exists");
  }
  auto shortest = [g](const EdgeVector& rho) {
    return min_weight_fractional_edge_cover(g, rho).row;
  };
  return FamilyOracle(g, "fec", std::move(shortest));
}

}  // namespace modkit
