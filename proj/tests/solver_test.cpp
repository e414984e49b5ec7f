#include "modkit/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "modkit/errors.hpp"
#include "support/generators.hpp"

namespace modkit {
namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(testing::numbered(10), edges, EdgeVector(edges.size(), 1.0));
}

Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return Graph(testing::numbered(6), edges, EdgeVector(9, 1.0));
}

void expect_kkt(const ModulusResult& r, double tol) {
  EXPECT_NEAR(energy(r.rho_star, r.p, r.sigma), r.modulus, 1e-12 * r.modulus);
  ASSERT_EQ(r.lambda.size(), r.active_rows.size());
  EdgeVector combo(r.sigma.size(), 0.0);
  for (std::size_t i = 0; i < r.active_rows.size(); ++i) {
    EXPECT_GE(r.lambda[i], 0.0);
    double len = rho_length(r.rho_star, r.active_rows[i]);
    EXPECT_GE(len, 1.0 - tol);
    if (r.lambda[i] > 1e-6) EXPECT_NEAR(len, 1.0, 1e-6);
    for (std::size_t e = 0; e < combo.size(); ++e) {
      combo[e] += r.lambda[i] * r.active_rows[i].usage[e];
    }
  }
  for (std::size_t e = 0; e < combo.size(); ++e) {
    if (r.rho_star[e] > 1e-6) {
      double grad = r.p * r.sigma[e] * std::pow(r.rho_star[e], r.p - 1.0);
      EXPECT_NEAR(grad, combo[e], 1e-6 * std::max(1.0, grad));
    }
  }
}

TEST(Energy, Examples) {
  Graph c6 = make_standard(StandardKind::Cycle, 6);
  EXPECT_DOUBLE_EQ(energy(EdgeVector(6, 0.5), 2.0, c6.sigma()), 1.5);
  EXPECT_EQ(energy(EdgeVector(6, 0.0), 2.0, c6.sigma()), 0.0);
  EXPECT_EQ(energy({1.0, 2.0}, kInfinity, {3.0, 1.0}), 3.0);
  EXPECT_DOUBLE_EQ(energy({1.0, 2.0}, 1.0, {3.0, 1.0}), 5.0);
  EXPECT_THROW(energy({1.0}, 0.5, {1.0}), DomainError);
  EXPECT_THROW(energy({1.0}, 2.0, {1.0, 1.0}), DomainError);
}

TEST(RhoLength, Examples) {
  Graph k4 = make_standard(StandardKind::Complete, 4);
  auto stars = star_family(k4);
  EXPECT_DOUBLE_EQ(rho_length(EdgeVector(6, 1.0), (*stars.explicit_rows())[0]), 3.0);
  Graph s5 = make_standard(StandardKind::Star, 5);
  UsageRow cover{EdgeVector(4, 1.0), "all"};
  EXPECT_DOUBLE_EQ(rho_length(EdgeVector(4, 0.25), cover), 1.0);
  UsageRow half{EdgeVector(5, 0.5), "half"};
  EXPECT_DOUBLE_EQ(rho_length(EdgeVector(5, 0.4), half), 1.0);
  EXPECT_THROW(rho_length(EdgeVector(3, 0.4), half), DomainError);
}

TEST(Subproblem, AllStarsOfK6) {
  Graph k6 = make_standard(StandardKind::Complete, 6);
  auto sol = solve_subproblem(*star_family(k6).explicit_rows(), 2.0, k6.sigma(), 1e-9);
  for (double x : sol.rho) EXPECT_NEAR(x, 0.2, 1e-9);
  EXPECT_NEAR(energy(sol.rho, 2.0, k6.sigma()), 0.6, 1e-9);
}

TEST(Subproblem, SingleEdgeRows) {
  EdgeVector sigma{2.5, 1.0, 1.0};
  auto one = solve_subproblem({{{1.0, 0.0, 0.0}, "a"}}, 2.0, sigma, 1e-9);
  EXPECT_NEAR(one.rho[0], 1.0, 1e-9);
  EXPECT_EQ(one.rho[1], 0.0);
  EXPECT_NEAR(energy(one.rho, 2.0, sigma), 2.5, 1e-9);

  EdgeVector unit(3, 1.0);
  auto two = solve_subproblem({{{1.0, 0.0, 0.0}, "a"}, {{0.0, 0.0, 1.0}, "c"}},
                              2.0, unit, 1e-9);
  EXPECT_NEAR(two.rho[0], 1.0, 1e-9);
  EXPECT_NEAR(two.rho[2], 1.0, 1e-9);
  EXPECT_NEAR(energy(two.rho, 2.0, unit), 2.0, 1e-9);
}

TEST(Subproblem, Errors) {
  EdgeVector unit(2, 1.0);
  EXPECT_THROW(solve_subproblem({}, 2.0, unit, 1e-9), DomainError);
  EXPECT_THROW(solve_subproblem({{{1.0, 0.0}, "a"}}, 1.0, unit, 1e-9), DomainError);
  EXPECT_THROW(solve_subproblem({{{1.0, 0.0}, "a"}}, kInfinity, unit, 1e-9), DomainError);
  EXPECT_THROW(solve_subproblem({{{0.0, 0.0}, "z"}}, 2.0, unit, 1e-9), DomainError);
  EXPECT_THROW(solve_subproblem({{{1.0}, "short"}}, 2.0, unit, 1e-9), DomainError);
}

// Two overlapping rows on a path: closed form from the KKT system.
TEST(Subproblem, OverlappingRowsAgainstLagrange) {
  // rows {e0, e1} and {e1, e2}; p = 2, sigma = 1. By symmetry rho0 = rho2 = a,
  // rho1 = b, a + b = 1 and 2a = lambda, 2b = 2 lambda, so b = 2a = 2/3.
  EdgeVector unit(3, 1.0);
  auto sol = solve_subproblem({{{1, 1, 0}, "x"}, {{0, 1, 1}, "y"}}, 2.0, unit, 1e-9);
  EXPECT_NEAR(sol.rho[0], 1.0 / 3, 1e-9);
  EXPECT_NEAR(sol.rho[1], 2.0 / 3, 1e-9);
  EXPECT_NEAR(sol.rho[2], 1.0 / 3, 1e-9);
  EXPECT_NEAR(sol.lambda[0], 2.0 / 3, 1e-8);
  EXPECT_NEAR(sol.lambda[1], 2.0 / 3, 1e-8);
}

TEST(BasicAlgorithm, Examples) {
  auto s6 = basic_algorithm(star_family(make_standard(StandardKind::Star, 6)), 2.0);
  EXPECT_NEAR(s6.modulus, 5.0, 5e-6);
  expect_kkt(s6, kDefaultTolerance);

  auto c6 = basic_algorithm(edge_cover_family(make_standard(StandardKind::Cycle, 6)), 2.0);
  EXPECT_NEAR(c6.modulus, 2.0 / 3, 1e-6);
  expect_kkt(c6, kDefaultTolerance);

  auto k5 = basic_algorithm(edge_cover_family(make_standard(StandardKind::Complete, 5)), 2.0);
  EXPECT_NEAR(k5.modulus, 10.0 / 9, 1e-6);
  expect_kkt(k5, kDefaultTolerance);
  EXPECT_EQ(k5.p, 2.0);
  EXPECT_EQ(k5.tolerance_used, kDefaultTolerance);
  EXPECT_GE(k5.iterations, 1);
}

TEST(BasicAlgorithm, Errors) {
  auto fam = star_family(make_standard(StandardKind::Cycle, 5));
  EXPECT_THROW(basic_algorithm(fam, 1.0), DomainError);
  EXPECT_THROW(basic_algorithm(fam, 2.0, 0.0), DomainError);
  EXPECT_THROW(basic_algorithm(fam, 2.0, EdgeVector(3, 1.0)), DomainError);
}

// Every star and every minimal edge cover is long enough at exit.
TEST(BasicAlgorithm, AdmissibleAtExitProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 24; ++trial) {
    Graph g = testing::random_graph(rng, 3 + trial % 6, 0.5, 0.5, 3.0);
    const double p = std::vector<double>{1.5, 2.0, 3.0}[trial % 3];
    auto stars = basic_algorithm(star_family(g), p);
    auto star_rows = *star_family(g).explicit_rows();
    for (const auto& row : star_rows) {
      EXPECT_GE(rho_length(stars.rho_star, row), 1.0 - 10 * kDefaultTolerance);
    }
    expect_kkt(stars, kDefaultTolerance);
    auto ec = basic_algorithm(edge_cover_family(g), p);
    for (const auto& c : enumerate_minimal_edge_covers(g)) {
      EXPECT_GE(rho_length(ec.rho_star, edge_set_row(g, c)),
                1.0 - 10 * kDefaultTolerance);
    }
    expect_kkt(ec, kDefaultTolerance);
  }
}

TEST(BasicAlgorithm, RegularGraphStarsProperty) {
  std::vector<Graph> graphs{make_standard(StandardKind::Cycle, 5),
                            make_standard(StandardKind::Cycle, 8),
                            make_standard(StandardKind::Complete, 4),
                            make_standard(StandardKind::Complete, 7),
                            k33(), petersen()};
  for (const auto& g : graphs) {
    const double d = static_cast<double>(min_degree(g));
    for (double p : {1.5, 2.0, 3.0}) {
      auto r = basic_algorithm(star_family(g), p);
      double expect = static_cast<double>(g.num_edges()) / std::pow(d, p);
      EXPECT_NEAR(r.modulus, expect, 1e-6 * expect) << to_edge_list(g) << " p=" << p;
    }
  }
}

TEST(BasicAlgorithm, StarSandwichProperty) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(rng, 4 + trial % 8, 0.4, 0.2, 5.0);
    const double p = 1.5 + 0.25 * (trial % 6);
    auto r = basic_algorithm(star_family(g), p);
    const double delta = static_cast<double>(min_degree(g));
    double smin = *std::min_element(g.sigma().begin(), g.sigma().end());
    double stotal = 0.0;
    for (double s : g.sigma()) stotal += s;
    EXPECT_GE(r.modulus, smin / std::pow(delta, p) * (1 - 1e-6));
    EXPECT_LE(r.modulus, stotal / std::pow(delta, p) * (1 + 1e-6));
  }
}

TEST(BasicAlgorithm, ScalingProperty) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing::random_graph(rng, 4 + trial % 5, 0.5, 0.5, 2.0);
    auto base = basic_algorithm(edge_cover_family(g), 2.5);
    for (double c : {4.0, 3.0}) {
      EdgeVector scaled = g.sigma();
      for (double& s : scaled) s *= c;
      auto r = basic_algorithm(edge_cover_family(g), 2.5, scaled);
      EXPECT_NEAR(r.modulus, c * base.modulus, 1e-9 * c * base.modulus);
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        EXPECT_NEAR(r.rho_star[e], base.rho_star[e], 1e-9);
      }
    }
  }
}

TEST(BasicAlgorithm, RestartDeterminism) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = testing::random_graph(rng, 7, 0.5, 0.5, 2.0);
    auto a = basic_algorithm(edge_cover_family(g), 2.0);
    auto b = basic_algorithm(edge_cover_family(g), 2.0);
    EXPECT_EQ(a.modulus, b.modulus);
    EXPECT_EQ(a.rho_star, b.rho_star);
    ASSERT_EQ(a.active_rows.size(), b.active_rows.size());
    for (std::size_t i = 0; i < a.active_rows.size(); ++i) {
      EXPECT_EQ(a.active_rows[i].label, b.active_rows[i].label);
    }
  }
}

// Larger families contain more constraints: stars sit inside no cover
// family, but every cover family is monotone under adding explicit rows.
TEST(BasicAlgorithm, MonotoneInTheFamilyProperty) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testing::random_graph(rng, 5 + trial % 3, 0.6);
    std::vector<UsageRow> all;
    for (const auto& c : enumerate_minimal_edge_covers(g)) all.push_back(edge_set_row(g, c));
    std::vector<UsageRow> half(all.begin(), all.begin() + (all.size() + 1) / 2);
    auto small = basic_algorithm(explicit_family(g, "half", half), 2.0);
    auto big = basic_algorithm(explicit_family(g, "all", all), 2.0);
    auto oracle = basic_algorithm(edge_cover_family(g), 2.0);
    EXPECT_LE(small.modulus, big.modulus * (1 + 1e-6));
    EXPECT_NEAR(big.modulus, oracle.modulus, 1e-6 * oracle.modulus);
  }
}

}  // namespace
}  // namespace modkit
