#include "modkit/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "modkit/errors.hpp"
#include "support/generators.hpp"

namespace modkit {
namespace {

TEST(ParseGraph, Triangle) {
  Graph g = parse_graph("a b\nb c\nc a");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"a", "b", "c"}));
  for (double s : g.sigma()) EXPECT_EQ(s, 1.0);
}

TEST(ParseGraph, WeightedSingleEdge) {
  Graph g = parse_graph("a b 2.5");
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.sigma()[0], 2.5);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  Graph g = parse_graph("# header\n\nx y 3 # trailing\n  y z\n");
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.sigma()[0], 3.0);
  EXPECT_EQ(g.edge_label(1), "y-z");
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("a a"), ParseError);
  EXPECT_THROW(parse_graph("a b\nb a"), ParseError);
  EXPECT_THROW(parse_graph("a b 0"), ParseError);
  EXPECT_THROW(parse_graph("a b -1"), ParseError);
  EXPECT_THROW(parse_graph("a b 1 2"), ParseError);
  EXPECT_THROW(parse_graph("a"), ParseError);
  EXPECT_THROW(parse_graph("a b x"), ParseError);
}

TEST(ParseGraph, ErrorCarriesLineNumber) {
  try {
    parse_graph("a b\nc d\nc c\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Star, StandardGraphs) {
  Graph s6 = make_standard(StandardKind::Star, 6);
  EXPECT_EQ(star(s6, "0").size(), 5u);
  EXPECT_EQ(star(s6, "3").size(), 1u);
  Graph c7 = make_standard(StandardKind::Cycle, 7);
  for (const auto& v : c7.vertex_names()) EXPECT_EQ(star(c7, v).size(), 2u);
  EXPECT_THROW(star(c7, "nope"), KeyError);
}

TEST(Star, IsolatedVertexGivesEmptyStar) {
  Graph g({"a", "b", "c"}, {{0, 1}}, {1.0});
  EXPECT_TRUE(star(g, "c").empty());
  EXPECT_TRUE(g.has_isolated_vertex());
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(make_standard(StandardKind::Complete, 6)), 5u);
  EXPECT_EQ(min_degree(make_standard(StandardKind::Path, 4)), 1u);
  EXPECT_EQ(min_degree(make_standard(StandardKind::Wheel, 6)), 3u);
}

TEST(MakeStandard, Sizes) {
  Graph k6 = make_standard(StandardKind::Complete, 6);
  EXPECT_EQ(k6.num_vertices(), 6u);
  EXPECT_EQ(k6.num_edges(), 15u);
  Graph w6 = make_standard(StandardKind::Wheel, 6);
  EXPECT_EQ(w6.num_edges(), 10u);
  EXPECT_EQ(w6.degree(0), 5u);
  for (int v = 1; v < 6; ++v) EXPECT_EQ(w6.degree(v), 3u);
  Graph b7 = make_standard(StandardKind::Barbell, 7);
  EXPECT_EQ(b7.num_vertices(), 14u);
  EXPECT_EQ(b7.num_edges(), 43u);
  EXPECT_EQ(b7.edge_label(barbell_bridge(b7, 7)), "6-7");
  EXPECT_EQ(make_standard("path:5").num_edges(), 4u);
}

TEST(MakeStandard, BelowMinimum) {
  EXPECT_THROW(make_standard(StandardKind::Star, 2), DomainError);
  EXPECT_THROW(make_standard(StandardKind::Cycle, 2), DomainError);
  EXPECT_THROW(make_standard(StandardKind::Path, 2), DomainError);
  EXPECT_THROW(make_standard(StandardKind::Wheel, 3), DomainError);
  EXPECT_THROW(make_standard(StandardKind::Barbell, 2), DomainError);
  EXPECT_THROW(make_standard("hypercube:3"), DomainError);
  EXPECT_THROW(make_standard("cycle:x"), DomainError);
}

TEST(MakeStandard, HandshakingAndDeterminism) {
  for (auto kind : {StandardKind::Star, StandardKind::Cycle,
                    StandardKind::Complete, StandardKind::Path,
                    StandardKind::Wheel, StandardKind::Barbell}) {
    for (int n = 4; n <= 9; ++n) {
      Graph g = make_standard(kind, n);
      std::size_t degree_sum = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        degree_sum += g.degree(static_cast<VertexIndex>(v));
      }
      EXPECT_EQ(degree_sum, 2 * g.num_edges());
      EXPECT_EQ(to_edge_list(g), to_edge_list(make_standard(kind, n)));
    }
  }
}

// parse -> serialize -> parse is the identity, for text and for JSON.
TEST(Serialization, RoundTripProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = parse_graph(
        to_edge_list(testing::random_graph(rng, 3 + trial % 8, 0.5, 0.1, 7.0)));
    Graph text = parse_graph(to_edge_list(g));
    Graph json = graph_from_json(nlohmann::json::parse(to_json(g).dump()));
    for (const Graph* h : {&text, &json}) {
      EXPECT_EQ(h->vertex_names(), g.vertex_names());
      ASSERT_EQ(h->num_edges(), g.num_edges());
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        EXPECT_EQ(h->edges()[e].u, g.edges()[e].u);
        EXPECT_EQ(h->edges()[e].v, g.edges()[e].v);
        EXPECT_EQ(h->sigma()[e], g.sigma()[e]);
      }
    }
  }
}

TEST(Serialization, JsonShape) {
  Graph g = parse_graph("a b 2\nb c");
  auto j = to_json(g);
  EXPECT_EQ(j["vertices"], nlohmann::json({"a", "b", "c"}));
  EXPECT_EQ(j["edges"][0], nlohmann::json({"a", "b", 2.0}));
  EXPECT_EQ(j["edges"][1], nlohmann::json({"b", "c", 1.0}));
}

}  // namespace
}  // namespace modkit
