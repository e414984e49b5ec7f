#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace modkit {

using VertexIndex = int;
using EdgeIndex = int;

/// Real value per edge, in the owning graph's edge order.
using EdgeVector = std::vector<double>;

/// Sorted, duplicate-free list of edge indices.
using EdgeSet = std::vector<EdgeIndex>;

struct Edge {
  VertexIndex u;
  VertexIndex v;
};

/// Undirected simple graph with positive edge weights.
///
/// Vertex ids are opaque strings mapped to dense indices in insertion
/// order. The edge order fixed at construction is the coordinate order of
/// every EdgeVector used with the graph. Instances are immutable.
class Graph {
 public:
  /// Validates the edge list: known endpoints, no self-loops, no duplicate
  /// unordered pairs, sigma(e) > 0. Throws ParseError on violation.
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges,
        EdgeVector sigma);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept {
    return names_;
  }
  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const EdgeVector& sigma() const noexcept { return sigma_; }

  /// Throws KeyError for unknown ids.
  VertexIndex index_of(std::string_view id) const;

  /// Edge indices incident to v, ascending.
  const EdgeSet& incident(VertexIndex v) const { return incidence_.at(v); }
  std::size_t degree(VertexIndex v) const { return incidence_.at(v).size(); }

  /// Edge joining u and v, or -1.
  EdgeIndex find_edge(VertexIndex u, VertexIndex v) const;

  bool has_isolated_vertex() const;

  /// "u-v" using vertex ids; the key used in JSON edge maps.
  std::string edge_label(EdgeIndex e) const;

  /// Same graph with a different weight vector.
  Graph with_sigma(EdgeVector sigma) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  EdgeVector sigma_;
  std::vector<EdgeSet> incidence_;
};

/// Parses "u v [w]" lines; '#' starts a comment, blank lines are skipped.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph, one edge per line, weights at full precision.
std::string to_edge_list(const Graph& g);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Edges incident to the vertex with the given id.
EdgeSet star(const Graph& g, std::string_view vertex);

/// Minimum vertex degree.
std::size_t min_degree(const Graph& g);

enum class StandardKind { Star, Cycle, Complete, Path, Wheel, Barbell };

StandardKind parse_standard_kind(std::string_view name);
std::string_view to_string(StandardKind kind);

/// Unweighted standard graph on vertices "0".."n-1" (barbell: 2n vertices).
///
///  - star S_n: center 0, leaves 1..n-1
///  - cycle C_n, path P_n: vertices in order along the cycle or path
///  - wheel W_n: hub 0, rim 1..n-1 forming a cycle
///  - barbell: two K_n on 0..n-1 and n..2n-1 with bridge (n-1, n)
///
/// Minimum n is 3 for every kind except the wheel (4). Throws DomainError.
Graph make_standard(StandardKind kind, int n);

/// Parses "kind:n", e.g. "complete:6".
Graph make_standard(std::string_view spec);

/// Index of the bridge edge of make_standard(Barbell, n).
EdgeIndex barbell_bridge(const Graph& g, int n);

/// 0/1 vector of an edge set.
EdgeVector indicator(const Graph& g, const EdgeSet& set);

}  // namespace modkit
