#pragma once

#include <limits>
#include <vector>

#include "modkit/families.hpp"
#include "modkit/graph.hpp"

namespace modkit {

/// Nonnegative edge vector.
using Density = EdgeVector;

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kMaxOuterIterations = 10000;
inline constexpr int kMaxInteriorIterations = 200;

struct ModulusResult {
  double modulus = 0.0;
  Density rho_star;
  std::vector<UsageRow> active_rows;
  /// One multiplier per active row.
  std::vector<double> lambda;
  double p = 2.0;
  EdgeVector sigma;
  int iterations = 0;
  double tolerance_used = kDefaultTolerance;
};

struct SubproblemSolution {
  Density rho;
  std::vector<double> lambda;
  int iterations = 0;
};

/// sum sigma * rho^p, or max sigma * rho when p is infinite. Throws
/// DomainError for p < 1 or mismatched sizes.
double energy(const Density& rho, double p, const EdgeVector& sigma);

/// Inner product of the row's usage with rho.
double rho_length(const Density& rho, const UsageRow& row);

/// Minimizes the p-energy subject to rho >= 0 and usage . rho >= 1 for the
/// given rows, by a primal-dual interior point method. Stationarity and
/// complementarity hold to tol. Throws SolverError when it fails to
/// converge.
SubproblemSolution solve_subproblem(const std::vector<UsageRow>& active,
                                    double p, const EdgeVector& sigma,
                                    double tol);

/// Active-set loop: start from the shortest object under rho = 0, then add
/// the shortest object of the current optimum until it has rho-length at
/// least 1 - tol.
ModulusResult basic_algorithm(const FamilyOracle& family, double p,
                              const EdgeVector& sigma,
                              double tol = kDefaultTolerance);

/// basic_algorithm with the graph's own weights.
ModulusResult basic_algorithm(const FamilyOracle& family, double p,
                              double tol = kDefaultTolerance);

}  // namespace modkit
