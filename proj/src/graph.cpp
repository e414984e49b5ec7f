#include "modkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "modkit/errors.hpp"

namespace modkit {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges,
             EdgeVector sigma)
    : names_(std::move(vertices)),
      edges_(std::move(edges)),
      sigma_(std::move(sigma)),
      incidence_(names_.size()) {
  if (sigma_.size() != edges_.size()) {
    throw ParseError("weight vector length " + std::to_string(sigma_.size()) +
                     " does not match edge count " +
                     std::to_string(edges_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<VertexIndex>(i)).second) {
      throw ParseError("duplicate vertex id '" + names_[i] + "'");
    }
  }
  const auto n = static_cast<VertexIndex>(names_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range");
    }
    if (u == v) throw ParseError("self-loop at '" + names_[u] + "'");
    if (!(sigma_[e] > 0.0) || !std::isfinite(sigma_[e])) {
      throw ParseError("non-positive weight on edge " + names_[u] + "-" +
                       names_[v]);
    }
    incidence_[u].push_back(static_cast<EdgeIndex>(e));
    incidence_[v].push_back(static_cast<EdgeIndex>(e));
  }
  // Duplicate detection on sorted neighbor lists.
  for (VertexIndex v = 0; v < n; ++v) {
    std::vector<VertexIndex> nbrs;
    nbrs.reserve(incidence_[v].size());
    for (EdgeIndex e : incidence_[v]) {
      nbrs.push_back(edges_[e].u == v ? edges_[e].v : edges_[e].u);
    }
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw ParseError("duplicate edge " + names_[v] + "-" + names_[*dup]);
    }
  }
}

VertexIndex Graph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw KeyError("unknown vertex '" + std::string(id) + "'");
  }
  return it->second;
}

EdgeIndex Graph::find_edge(VertexIndex u, VertexIndex v) const {
  const auto& a = incidence_.at(u);
  const auto& b = incidence_.at(v);
  const auto& shorter = a.size() <= b.size() ? a : b;
  for (EdgeIndex e : shorter) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return -1;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(incidence_.begin(), incidence_.end(),
                     [](const EdgeSet& s) { return s.empty(); });
}

std::string Graph::edge_label(EdgeIndex e) const {
  const Edge& ed = edges_.at(e);
  return names_[ed.u] + "-" + names_[ed.v];
}

Graph Graph::with_sigma(EdgeVector sigma) const {
  return Graph(names_, edges_, std::move(sigma));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_weight(std::string_view tok, int line) {
  // std::from_chars for double is available in libstdc++ 11.
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("bad weight '" + std::string(tok) + "'", line);
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ParseError("weight must be positive, got '" + std::string(tok) + "'",
                     line);
  }
  return w;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexIndex> index;
  std::vector<Edge> edges;
  EdgeVector sigma;
  auto intern = [&](std::string_view id) {
    auto [it, inserted] =
        index.emplace(std::string(id), static_cast<VertexIndex>(names.size()));
    if (inserted) names.emplace_back(id);
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError("expected 'u v [w]'", line_no);
    }
    if (tok[0] == tok[1]) {
      throw ParseError("self-loop at '" + std::string(tok[0]) + "'", line_no);
    }
    double w = tok.size() == 3 ? parse_weight(tok[2], line_no) : 1.0;
    VertexIndex u = intern(tok[0]);
    VertexIndex v = intern(tok[1]);
    edges.push_back({u, v});
    sigma.push_back(w);
  }
  return Graph(std::move(names), std::move(edges), std::move(sigma));
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    out += g.name(ed.u) + " " + g.name(ed.v) + " " + format_double(g.sigma()[e]);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    edges.push_back({g.name(ed.u), g.name(ed.v), g.sigma()[e]});
  }
  return {{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("vertices").get<std::vector<std::string>>();
    std::unordered_map<std::string, VertexIndex> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index.emplace(names[i], static_cast<VertexIndex>(i));
    }
    std::vector<Edge> edges;
    EdgeVector sigma;
    for (const auto& e : j.at("edges")) {
      auto u = index.find(e.at(0).get<std::string>());
      auto v = index.find(e.at(1).get<std::string>());
      if (u == index.end() || v == index.end()) {
        throw ParseError("edge references an undeclared vertex");
      }
      edges.push_back({u->second, v->second});
      sigma.push_back(e.size() > 2 ? e.at(2).get<double>() : 1.0);
    }
    return Graph(std::move(names), std::move(edges), std::move(sigma));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

EdgeSet star(const Graph& g, std::string_view vertex) {
  return g.incident(g.index_of(vertex));
}

std::size_t min_degree(const Graph& g) {
  if (g.num_vertices() == 0) throw DomainError("graph has no vertices");
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    d = std::min(d, g.degree(static_cast<VertexIndex>(v)));
  }
  return d;
}

StandardKind parse_standard_kind(std::string_view name) {
  if (name == "star") return StandardKind::Star;
  if (name == "cycle") return StandardKind::Cycle;
  if (name == "complete") return StandardKind::Complete;
  if (name == "path") return StandardKind::Path;
  if (name == "wheel") return StandardKind::Wheel;
  if (name == "barbell") return StandardKind::Barbell;
  throw DomainError("unknown standard graph kind '" + std::string(name) + "'");
}

std::string_view to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::Star: return "star";
    case StandardKind::Cycle: return "cycle";
    case StandardKind::Complete: return "complete";
    case StandardKind::Path: return "path";
    case StandardKind::Wheel: return "wheel";
    case StandardKind::Barbell: return "barbell";
  }
  return "?";
}

namespace {

void add_clique(std::vector<Edge>& edges, int first, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({first + i, first + j});
  }
}

}  // namespace

Graph make_standard(StandardKind kind, int n) {
  const int min_n = kind == StandardKind::Wheel ? 4 : 3;
  if (n < min_n) {
    throw DomainError(std::string(to_string(kind)) + " requires n >= " +
                      std::to_string(min_n) + ", got " + std::to_string(n));
  }
  const int nv = kind == StandardKind::Barbell ? 2 * n : n;
  std::vector<std::string> names;
  names.reserve(nv);
  for (int i = 0; i < nv; ++i) names.push_back(std::to_string(i));

  std::vector<Edge> edges;
  switch (kind) {
    case StandardKind::Star:
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case StandardKind::Cycle:
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case StandardKind::Path:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case StandardKind::Complete:
      add_clique(edges, 0, n);
      break;
    case StandardKind::Wheel:
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      for (int i = 1; i < n; ++i) edges.push_back({i, i == n - 1 ? 1 : i + 1});
      break;
    case StandardKind::Barbell:
      add_clique(edges, 0, n);
      add_clique(edges, n, n);
      edges.push_back({n - 1, n});
      break;
  }
  EdgeVector sigma(edges.size(), 1.0);
  return Graph(std::move(names), std::move(edges), std::move(sigma));
}

Graph make_standard(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("expected kind:n, got '" + std::string(spec) + "'");
  }
  auto kind = parse_standard_kind(spec.substr(0, colon));
  auto num = spec.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw DomainError("bad size in '" + std::string(spec) + "'");
  }
  return make_standard(kind, n);
}

EdgeIndex barbell_bridge(const Graph& g, int n) {
  EdgeIndex e = g.find_edge(n - 1, n);
  if (e < 0) throw DomainError("graph has no barbell bridge");
  return e;
}

EdgeVector indicator(const Graph& g, const EdgeSet& set) {
  EdgeVector out(g.num_edges(), 0.0);
  for (EdgeIndex e : set) out.at(e) = 1.0;
  return out;
}

}  // namespace modkit
