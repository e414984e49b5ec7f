#include "modkit/families.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <sstream>

#include "modkit/errors.hpp"
#include "modkit/matching.hpp"

namespace modkit {

FamilyOracle::FamilyOracle(Graph graph, std::string name, ShortestFn shortest,
                           std::optional<std::vector<UsageRow>> rows)
    : graph_(std::move(graph)),
      name_(std::move(name)),
      shortest_(std::move(shortest)),
      rows_(std::move(rows)) {}

ShortestObject FamilyOracle::shortest(const EdgeVector& rho) const {
  if (rho.size() != graph_.num_edges()) {
    throw DomainError("density has " + std::to_string(rho.size()) +
                      " entries, graph has " +
                      std::to_string(graph_.num_edges()) + " edges");
  }
  ShortestObject out{shortest_(rho), 0.0};
  for (std::size_t e = 0; e < rho.size(); ++e) {
    out.length += out.row.usage[e] * rho[e];
  }
  return out;
}

UsageRow edge_set_row(const Graph& g, const EdgeSet& set) {
  std::string label = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) label += ',';
    label += g.edge_label(set[i]);
  }
  label += '}';
  return {indicator(g, set), std::move(label)};
}

std::string vector_label(const EdgeVector& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  os << ']';
  return os.str();
}

FamilyOracle star_family(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw Infeasible("star family of a graph with an isolated vertex has an "
                     "all-zero row");
  }
  std::vector<UsageRow> rows;
  rows.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    rows.push_back({indicator(g, g.incident(static_cast<VertexIndex>(v))),
                    g.name(static_cast<VertexIndex>(v))});
  }
  auto shortest = [g, rows](const EdgeVector& rho) {
    std::size_t best = 0;
    double best_len = 0.0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      double len = 0.0;
      for (EdgeIndex e : g.incident(static_cast<VertexIndex>(v))) len += rho[e];
      if (v == 0 || len < best_len) {
        best = v;
        best_len = len;
      }
    }
    return rows[best];
  };
  return FamilyOracle(g, "stars", std::move(shortest), std::move(rows));
}

FamilyOracle edge_cover_family(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw Infeasible("graph has an isolated vertex; no edge cover exists");
  }
  auto shortest = [g](const EdgeVector& rho) {
    return edge_set_row(g, min_weight_edge_cover(g, rho));
  };
  return FamilyOracle(g, "ec", std::move(shortest));
}

FamilyOracle explicit_family(const Graph& g, std::string name,
                             std::vector<UsageRow> rows) {
  if (rows.empty()) throw DomainError("explicit family has no rows");
  for (const auto& row : rows) {
    if (row.usage.size() != g.num_edges()) {
      throw DomainError("row '" + row.label + "' has the wrong dimension");
    }
    bool positive = false;
    for (double x : row.usage) {
      if (x < 0.0) throw DomainError("row '" + row.label + "' is negative");
      positive = positive || x > 0.0;
    }
    if (!positive) throw DomainError("row '" + row.label + "' is all zero");
  }
  auto shared = std::make_shared<const std::vector<UsageRow>>(rows);
  auto shortest = [shared](const EdgeVector& rho) {
    std::size_t best = 0;
    double best_len = 0.0;
    for (std::size_t i = 0; i < shared->size(); ++i) {
      const auto& u = (*shared)[i].usage;
      double len = 0.0;
      for (std::size_t e = 0; e < u.size(); ++e) len += u[e] * rho[e];
      if (i == 0 || len < best_len) {
        best = i;
        best_len = len;
      }
    }
    return (*shared)[best];
  };
  return FamilyOracle(g, std::move(name), std::move(shortest), std::move(rows));
}

std::vector<EdgeSet> enumerate_minimal_edge_covers(const Graph& g) {
  const std::size_t m = g.num_edges();
  if (m > kMaxEnumerationEdges) {
    throw DomainError("minimal edge cover enumeration limited to " +
                      std::to_string(kMaxEnumerationEdges) + " edges, got " +
                      std::to_string(m));
  }
  const std::size_t n = g.num_vertices();
  std::vector<EdgeSet> out;
  if (g.has_isolated_vertex()) return out;

  std::vector<int> last_edge(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    last_edge[v] = g.incident(static_cast<VertexIndex>(v)).back();
  }
  std::vector<int> count(n, 0);
  std::vector<bool> chosen(m, false);
  EdgeSet current;

  // An edge whose two endpoints are both covered twice can be dropped, and
  // adding edges never makes it necessary again.
  auto redundant_near = [&](VertexIndex v) {
    for (EdgeIndex f : g.incident(v)) {
      if (chosen[f] && count[g.edge(f).u] >= 2 && count[g.edge(f).v] >= 2) {
        return true;
      }
    }
    return false;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    for (std::size_t v = 0; v < n; ++v) {
      if (count[v] == 0 && last_edge[v] < static_cast<int>(i)) return;
    }
    if (i == m) {
      out.push_back(current);
      return;
    }
    const Edge& ed = g.edge(static_cast<EdgeIndex>(i));
    ++count[ed.u];
    ++count[ed.v];
    chosen[i] = true;
    current.push_back(static_cast<EdgeIndex>(i));
    if (!redundant_near(ed.u) && !redundant_near(ed.v)) self(self, i + 1);
    current.pop_back();
    chosen[i] = false;
    --count[ed.u];
    --count[ed.v];
    self(self, i + 1);
  };
  recurse(recurse, 0);
  return out;
}

namespace {

using Mask = std::uint32_t;

class BasicFecEnumerator {
 public:
  explicit BasicFecEnumerator(const Graph& g) : g_(g), adj_(g.num_vertices(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  std::vector<BasicFec> run() {
    const auto n = g_.num_vertices();
    if (n == 0) return {};
    recurse((Mask{1} << n) - 1);
    return std::move(out_);
  }

 private:
  static std::vector<VertexIndex> bits(Mask m) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; m != 0; ++v, m >>= 1) {
      if (m & 1) out.push_back(v);
    }
    return out;
  }

  void push_star(VertexIndex center, Mask leaves) {
    FecComponent c{FecComponent::Kind::Substar, {center}, {}};
    for (VertexIndex leaf : bits(leaves)) {
      c.vertices.push_back(leaf);
      c.edges.push_back(g_.find_edge(center, leaf));
    }
    std::sort(c.edges.begin(), c.edges.end());
    components_.push_back(std::move(c));
  }

  void push_cycle(const std::vector<VertexIndex>& cycle) {
    FecComponent c{FecComponent::Kind::OddCycle, cycle, {}};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      c.edges.push_back(g_.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    std::sort(c.edges.begin(), c.edges.end());
    components_.push_back(std::move(c));
  }

  // Calls f for each nonempty submask of m, in increasing numeric order.
  template <class F>
  static void for_each_submask(Mask m, F&& f) {
    std::vector<Mask> subs;
    for (Mask s = m; s != 0; s = (s - 1) & m) subs.push_back(s);
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) f(*it);
  }

  void emit() {
    BasicFec fec;
    fec.usage.assign(g_.num_edges(), 0.0);
    std::string key(g_.num_edges(), '0');
    for (const auto& c : components_) {
      const bool cycle = c.kind == FecComponent::Kind::OddCycle;
      for (EdgeIndex e : c.edges) {
        fec.usage[e] = cycle ? 0.5 : 1.0;
        key[e] = cycle ? 'h' : '1';
      }
    }
    if (!seen_.insert(std::move(key)).second) return;
    fec.components = components_;
    out_.push_back(std::move(fec));
  }

  void recurse(Mask uncovered) {
    if (uncovered == 0) {
      emit();
      return;
    }
    const VertexIndex v = __builtin_ctz(uncovered);
    const Mask rest = uncovered & ~(Mask{1} << v);

    // v is the center of a star on some of its free neighbors.
    for_each_submask(adj_[v] & rest, [&](Mask leaves) {
      push_star(v, leaves);
      recurse(rest & ~leaves);
      components_.pop_back();
    });

    // v is a leaf of a star with at least two leaves centered at c.
    for (VertexIndex c : bits(adj_[v] & rest)) {
      const Mask others = adj_[c] & rest & ~(Mask{1} << c);
      for_each_submask(others, [&](Mask more) {
        push_star(c, more | (Mask{1} << v));
        recurse(rest & ~(Mask{1} << c) & ~more);
        components_.pop_back();
      });
    }

    // Odd cycles through v. v is the smallest free vertex, so each cycle is
    // found twice (once per direction); keep the one with path[1] < last.
    std::vector<VertexIndex> path{v};
    extend_cycle(path, Mask{1} << v, rest);
  }

  void extend_cycle(std::vector<VertexIndex>& path, Mask on_path, Mask free) {
    const VertexIndex last = path.back();
    const std::size_t k = path.size();
    if (k >= 3 && k % 2 == 1 && (adj_[last] >> path[0] & 1) && path[1] < last) {
      push_cycle(path);
      recurse(free & ~on_path);
      components_.pop_back();
    }
    for (VertexIndex w : bits(adj_[last] & free & ~on_path)) {
      path.push_back(w);
      extend_cycle(path, on_path | (Mask{1} << w), free);
      path.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  std::vector<FecComponent> components_;
  std::set<std::string> seen_;
  std::vector<BasicFec> out_;
};

}  // namespace

std::vector<BasicFec> enumerate_basic_fecs(const Graph& g) {
  if (g.num_vertices() > kMaxEnumerationVertices) {
    throw DomainError("basic fractional edge cover enumeration limited to " +
                      std::to_string(kMaxEnumerationVertices) +
                      " vertices, got " + std::to_string(g.num_vertices()));
  }
  return BasicFecEnumerator(g).run();
}

bool is_fractional_edge_cover(const Graph& g, const EdgeVector& gamma) {
  if (gamma.size() != g.num_edges()) {
    throw DomainError("vector has " + std::to_string(gamma.size()) +
                      " entries, graph has " + std::to_string(g.num_edges()) +
                      " edges");
  }
  for (double x : gamma) {
    if (x < 0.0) throw DomainError("fractional edge cover entries must be >= 0");
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    double sum = 0.0;
    for (EdgeIndex e : g.incident(static_cast<VertexIndex>(v))) sum += gamma[e];
    if (sum < 1.0 - 1e-12) return false;
  }
  return true;
}

}  // namespace modkit
