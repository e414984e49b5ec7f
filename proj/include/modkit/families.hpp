#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit {

/// One object of a family, seen as its row of the usage matrix.
struct UsageRow {
  EdgeVector usage;
  /// Vertex id for stars, "{a-b,c-d}" for edge sets, the value vector for
  /// fractional objects.
  std::string label;

  friend bool operator==(const UsageRow& a, const UsageRow& b) {
    return a.usage == b.usage;
  }
};

/// A rho-shortest object together with its rho-length.
struct ShortestObject {
  UsageRow row;
  double length = 0.0;
};

/// A family of objects presented through an exact shortest-object oracle,
/// optionally with its full list of rows when the family is small.
///
/// The oracle must return a row minimizing the rho-length over the whole
/// family. The active-set solver only ever calls shortest().
class FamilyOracle {
 public:
  using ShortestFn = std::function<UsageRow(const EdgeVector& rho)>;

  FamilyOracle(Graph graph, std::string name, ShortestFn shortest,
               std::optional<std::vector<UsageRow>> rows = std::nullopt);

  const Graph& graph() const noexcept { return graph_; }
  const std::string& name() const noexcept { return name_; }

  /// Throws DomainError if rho has the wrong dimension.
  ShortestObject shortest(const EdgeVector& rho) const;

  const std::optional<std::vector<UsageRow>>& explicit_rows() const noexcept {
    return rows_;
  }

 private:
  Graph graph_;
  std::string name_;
  ShortestFn shortest_;
  std::optional<std::vector<UsageRow>> rows_;
};

/// Stars delta(v). Rows are the indicator vectors in vertex order; the
/// oracle returns the vertex of least rho-degree, lowest index on ties.
/// Throws Infeasible if some vertex is isolated.
FamilyOracle star_family(const Graph& g);

/// Edge covers, with the minimum-weight edge cover as oracle. Throws
/// Infeasible if some vertex is isolated.
FamilyOracle edge_cover_family(const Graph& g);

/// Family given by an explicit list of rows; the oracle scans the list and
/// keeps the first minimum. Rows must be nonnegative and nontrivial.
FamilyOracle explicit_family(const Graph& g, std::string name,
                             std::vector<UsageRow> rows);

/// Indicator row of an edge set, labelled by its edges.
UsageRow edge_set_row(const Graph& g, const EdgeSet& set);

/// Row label for a fractional vector: "[1,0.5,0,...]".
std::string vector_label(const EdgeVector& values);

/// Largest graph accepted by the exhaustive enumerators.
inline constexpr std::size_t kMaxEnumerationEdges = 25;
inline constexpr std::size_t kMaxEnumerationVertices = 12;

/// All inclusion-minimal edge covers, each as a sorted edge set, in the
/// order of a depth-first include/exclude search over edge indices.
/// Throws DomainError when |E| > kMaxEnumerationEdges.
std::vector<EdgeSet> enumerate_minimal_edge_covers(const Graph& g);

/// Connected piece of the support of a basic fractional edge cover.
struct FecComponent {
  enum class Kind { Substar, OddCycle };
  Kind kind;
  /// Substar: center first (either end for a single edge). Odd cycle:
  /// vertices in cyclic order starting from the smallest index.
  std::vector<VertexIndex> vertices;
  EdgeSet edges;
};

/// Fractional edge cover with values in {0, 1/2, 1} whose support is a
/// vertex-disjoint union of substars (value 1) and odd cycles (value 1/2).
struct BasicFec {
  EdgeVector usage;
  std::vector<FecComponent> components;
};

/// Every basic fractional edge cover of g, built from partitions of V into
/// star blocks and odd-cycle blocks realizable in g. Deduplicated by usage
/// vector. Throws DomainError when |V| > kMaxEnumerationVertices.
std::vector<BasicFec> enumerate_basic_fecs(const Graph& g);

/// gamma(delta(v)) >= 1 - 1e-12 for every vertex. Throws DomainError for a
/// negative entry or a dimension mismatch.
bool is_fractional_edge_cover(const Graph& g, const EdgeVector& gamma);

}  // namespace modkit
