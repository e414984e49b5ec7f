#include "modkit/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blossom.hpp"
#include "modkit/errors.hpp"

namespace modkit {
namespace {

void check_weights(const Graph& g, const EdgeVector& w) {
  if (w.size() != g.num_edges()) {
    throw DomainError("weight vector has " + std::to_string(w.size()) +
                      " entries, graph has " + std::to_string(g.num_edges()) +
                      " edges");
  }
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw DomainError("matching weights must be finite and nonnegative");
    }
  }
}

// Minimum-weight perfect matching on a raw edge list. Returns mate[].
std::vector<int> raw_mwpm(int n, const std::vector<detail::WeightedEdge>& edges) {
  if (n % 2 != 0) {
    throw Infeasible("odd vertex count " + std::to_string(n) +
                     " admits no perfect matching");
  }
  double maxw = 0.0;
  for (const auto& e : edges) maxw = std::max(maxw, e.weight);
  // Maximum-cardinality matching under w' = (max w + 1) - w picks the
  // lightest perfect matching whenever one exists.
  const double shift = maxw + 1.0;
  std::vector<detail::WeightedEdge> inverted;
  inverted.reserve(edges.size());
  for (const auto& e : edges) inverted.push_back({e.u, e.v, shift - e.weight});
  auto result = detail::max_weight_matching(n, inverted, true);
  for (int v = 0; v < n; ++v) {
    if (result.mate[v] < 0) throw Infeasible("graph has no perfect matching");
  }
  const double tol = kMatchingCertificateTolerance * std::max(1.0, shift);
  if (result.certificate_error > tol) {
    throw SolverError("matching optimality certificate violated by " +
                      std::to_string(result.certificate_error));
  }
  return result.mate;
}

}  // namespace

double set_weight(const EdgeSet& set, const EdgeVector& w) {
  double total = 0.0;
  for (EdgeIndex e : set) total += w.at(e);
  return total;
}

bool is_edge_cover(const Graph& g, const EdgeSet& set) {
  std::vector<bool> covered(g.num_vertices(), false);
  for (EdgeIndex e : set) {
    covered[g.edge(e).u] = true;
    covered[g.edge(e).v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Matching min_weight_perfect_matching(const Graph& g, const EdgeVector& w) {
  check_weights(g, w);
  std::vector<detail::WeightedEdge> edges;
  edges.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    edges.push_back({g.edges()[e].u, g.edges()[e].v, w[e]});
  }
  auto mate = raw_mwpm(static_cast<int>(g.num_vertices()), edges);
  Matching m;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (mate[ed.u] == ed.v) m.edges.push_back(static_cast<EdgeIndex>(e));
  }
  m.weight = set_weight(m.edges, w);
  return m;
}

Matching brute_force_mwpm(const Graph& g, const EdgeVector& w) {
  check_weights(g, w);
  const std::size_t n = g.num_vertices();
  if (n > 12) {
    throw DomainError("brute-force matching limited to 12 vertices, got " +
                      std::to_string(n));
  }
  if (n % 2 != 0) throw Infeasible("odd vertex count admits no perfect matching");

  std::vector<bool> used(n, false);
  EdgeSet current;
  Matching best;
  bool found = false;
  auto consider = [&] {
    EdgeSet sorted = current;
    std::sort(sorted.begin(), sorted.end());
    double weight = set_weight(sorted, w);
    if (!found || weight < best.weight - 1e-12 ||
        (weight <= best.weight + 1e-12 && sorted < best.edges)) {
      best = {sorted, weight};
      found = true;
    }
  };
  auto recurse = [&](auto&& self) -> void {
    std::size_t v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) {
      consider();
      return;
    }
    used[v] = true;
    for (EdgeIndex e : g.incident(static_cast<VertexIndex>(v))) {
      const Edge& ed = g.edge(e);
      const VertexIndex other = ed.u == static_cast<VertexIndex>(v) ? ed.v : ed.u;
      if (used[other]) continue;
      used[other] = true;
      current.push_back(e);
      self(self);
      current.pop_back();
      used[other] = false;
    }
    used[v] = false;
  };
  recurse(recurse);
  if (!found) throw Infeasible("graph has no perfect matching");
  return best;
}

EdgeSet min_weight_edge_cover(const Graph& g, const EdgeVector& w) {
  check_weights(g, w);
  if (g.has_isolated_vertex()) {
    throw Infeasible("graph has an isolated vertex; no edge cover exists");
  }
  const int n = static_cast<int>(g.num_vertices());
  std::vector<EdgeIndex> cheapest(n, -1);
  for (int v = 0; v < n; ++v) {
    for (EdgeIndex e : g.incident(v)) {
      if (cheapest[v] == -1 || w[e] < w[cheapest[v]]) cheapest[v] = e;
    }
  }

  std::vector<detail::WeightedEdge> aux;
  aux.reserve(2 * g.num_edges() + n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    aux.push_back({ed.u, ed.v, w[e]});
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    aux.push_back({ed.u + n, ed.v + n, w[e]});
  }
  for (int v = 0; v < n; ++v) {
    aux.push_back({v, v + n, 2.0 * w[cheapest[v]]});
  }
  auto mate = raw_mwpm(2 * n, aux);

  EdgeSet cover;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (mate[ed.u] == ed.v) cover.push_back(static_cast<EdgeIndex>(e));
  }
  for (int v = 0; v < n; ++v) {
    if (mate[v] == v + n) cover.push_back(cheapest[v]);
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return cover;
}

}  // namespace modkit
