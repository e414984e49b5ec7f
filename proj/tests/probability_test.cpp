#include "modkit/probability.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "modkit/errors.hpp"
#include "support/generators.hpp"

namespace modkit {
namespace {

Pmf uniform(const std::vector<UsageRow>& rows) {
  Pmf pmf;
  for (const auto& r : rows) {
    pmf.labels.push_back(r.label);
    pmf.mass.push_back(1.0 / static_cast<double>(rows.size()));
  }
  return pmf;
}

// Double sum over ordered pairs, independent of the per-edge form.
double overlap_by_pairs(const Pmf& pmf, const std::vector<UsageRow>& rows) {
  double total = 0.0;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      double common = 0.0;
      for (std::size_t e = 0; e < rows[a].usage.size(); ++e) {
        common += rows[a].usage[e] * rows[b].usage[e];
      }
      total += pmf.mass[a] * pmf.mass[b] * common;
    }
  }
  return total;
}

TEST(PmfFromResult, StarGraphs) {
  for (int n = 4; n <= 8; ++n) {
    auto r = basic_algorithm(star_family(make_standard(StandardKind::Star, n)), 2.0);
    Pmf pmf = pmf_from_result(r);
    double total = 0.0;
    for (std::size_t i = 0; i < pmf.labels.size(); ++i) {
      total += pmf.mass[i];
      EXPECT_NEAR(pmf.mass[i], pmf.labels[i] == "0" ? 0.0 : 1.0 / (n - 1), 1e-6);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(PmfFromResult, UniformOnCyclesAndCompleteGraphs) {
  for (int n = 3; n <= 8; ++n) {
    for (auto kind : {StandardKind::Cycle, StandardKind::Complete}) {
      Graph g = make_standard(kind, n);
      auto r = basic_algorithm(star_family(g), 2.0);
      // The pmf lives on the active rows; stars left out carry zero mass.
      auto usage = expected_edge_usage(pmf_from_result(r), r.active_rows);
      for (double x : usage) EXPECT_NEAR(x, 2.0 / n, 1e-6);
    }
  }
}

TEST(PmfFromResult, Degenerate) {
  ModulusResult r;
  r.active_rows = {{{1.0}, "a"}};
  r.lambda = {0.0};
  EXPECT_THROW(pmf_from_result(r), DegenerateResult);
}

TEST(ExpectedUsage, Examples) {
  Graph k5 = make_standard(StandardKind::Complete, 5);
  auto rows = *star_family(k5).explicit_rows();
  for (double x : expected_edge_usage(uniform(rows), rows)) EXPECT_DOUBLE_EQ(x, 0.4);

  Graph s6 = make_standard(StandardKind::Star, 6);
  auto srows = *star_family(s6).explicit_rows();
  Pmf leaves{{"1", "2", "3", "4", "5"}, EdgeVector(5, 0.2)};
  for (double x : expected_edge_usage(leaves, srows)) EXPECT_DOUBLE_EQ(x, 0.2);

  Graph c4 = make_standard(StandardKind::Cycle, 4);
  UsageRow cover = edge_set_row(c4, {0, 2});
  EXPECT_EQ(expected_edge_usage({{cover.label}, {1.0}}, {cover}), cover.usage);

  EXPECT_THROW(expected_edge_usage({{"nope"}, {1.0}}, {cover}), DomainError);
}

TEST(ExpectedOverlap, Examples) {
  for (int n = 3; n <= 9; ++n) {
    auto c = *star_family(make_standard(StandardKind::Cycle, n)).explicit_rows();
    EXPECT_NEAR(expected_overlap(uniform(c), c), 4.0 / n, 1e-12);
    auto k = *star_family(make_standard(StandardKind::Complete, n)).explicit_rows();
    EXPECT_NEAR(expected_overlap(uniform(k), k), 2.0 * (n - 1) / n, 1e-12);
  }
  Graph k4 = make_standard(StandardKind::Complete, 4);
  UsageRow three = edge_set_row(k4, {0, 1, 5});
  EXPECT_DOUBLE_EQ(expected_overlap({{three.label}, {1.0}}, {three}), 3.0);
  UsageRow half{EdgeVector(6, 0.5), "half"};
  EXPECT_THROW(expected_overlap({{"half"}, {1.0}}, {half}), DomainError);
}

TEST(ExpectedOverlap, MatchesPairSumProperty) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(rng, 4 + trial % 5, 0.5);
    std::vector<UsageRow> rows;
    for (const auto& c : enumerate_minimal_edge_covers(g)) rows.push_back(edge_set_row(g, c));
    Pmf pmf;
    double total = 0.0;
    for (const auto& r : rows) {
      pmf.labels.push_back(r.label);
      pmf.mass.push_back(u(rng));
      total += pmf.mass.back();
    }
    for (double& m : pmf.mass) m /= total;
    EXPECT_NEAR(expected_overlap(pmf, rows), overlap_by_pairs(pmf, rows), 1e-12);
  }
}

TEST(UniformLowerBound, Examples) {
  for (int n = 3; n <= 9; ++n) {
    Graph c = make_standard(StandardKind::Cycle, n);
    EXPECT_NEAR(uniform_star_lower_bound(c, 2.0, c.sigma()), n / 4.0, 1e-12);
    Graph k = make_standard(StandardKind::Complete, n);
    EXPECT_NEAR(uniform_star_lower_bound(k, 2.0, k.sigma()), n / (2.0 * (n - 1)), 1e-12);
    for (double p : {1.5, 3.0}) {
      double d = n - 1.0;
      EXPECT_NEAR(uniform_star_lower_bound(k, p, k.sigma()),
                  k.num_edges() / std::pow(d, p), 1e-12);
    }
  }
}

TEST(UniformLowerBound, BracketsStarModulusProperty) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(rng, 4 + trial % 7, 0.5, 0.3, 3.0);
    double p = 1.5 + 0.25 * (trial % 6);
    double mod = basic_algorithm(star_family(g), p).modulus;
    double total = 0.0;
    for (double s : g.sigma()) total += s;
    EXPECT_LE(uniform_star_lower_bound(g, p, g.sigma()), mod * (1 + 1e-6));
    EXPECT_LE(mod, total / std::pow(double(min_degree(g)), p) * (1 + 1e-6));
  }
}

// Optimal pmfs: masses form a distribution, the expected usage is
// sigma rho^(p-1) / Mod, and for p = 2 the overlap is 1 / Mod.
TEST(OptimalPmf, IdentitiesProperty) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 24; ++trial) {
    const bool unit = trial % 2 == 0;
    Graph g = testing::random_graph(rng, 4 + trial % 6, 0.5, unit ? 1.0 : 0.5,
                                    unit ? 1.0 : 2.0);
    const double p = unit ? 2.0 : 1.5 + 0.5 * (trial % 3);
    for (const auto& fam : {star_family(g), edge_cover_family(g)}) {
      auto r = basic_algorithm(fam, p);
      Pmf pmf = pmf_from_result(r);
      double total = 0.0;
      for (double m : pmf.mass) {
        EXPECT_GE(m, 0.0);
        total += m;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      auto usage = expected_edge_usage(pmf, r.active_rows);
      auto want = optimal_edge_usage(r.rho_star, p, g.sigma(), r.modulus);
      for (std::size_t e = 0; e < usage.size(); ++e) {
        if (r.rho_star[e] > r.tolerance_used) EXPECT_NEAR(usage[e], want[e], 1e-6);
      }
      if (unit) {
        EXPECT_NEAR(expected_overlap(pmf, r.active_rows), 1.0 / r.modulus,
                    1e-5 / r.modulus);
      }
    }
  }
}

}  // namespace
}  // namespace modkit
