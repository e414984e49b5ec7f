#pragma once

#include <string>
#include <vector>

#include "modkit/families.hpp"
#include "modkit/solver.hpp"

namespace modkit {

/// Probability mass over family objects, keyed by row label.
struct Pmf {
  std::vector<std::string> labels;
  std::vector<double> mass;
};

/// mu(row) = lambda(row) / sum lambda over the active rows. Throws
/// DegenerateResult when the multipliers sum to zero.
Pmf pmf_from_result(const ModulusResult& result);

/// sum_rows mu(row) * usage(row, e). Every pmf label must name one of the
/// rows; rows outside the pmf carry no mass. Throws DomainError otherwise.
EdgeVector expected_edge_usage(const Pmf& pmf, const std::vector<UsageRow>& rows);

/// E|A cap B| for independent A, B drawn from mu, computed as
/// sum_e (sum_A mu(A) 1_A(e))^2. Throws DomainError for a non-indicator row.
double expected_overlap(const Pmf& pmf, const std::vector<UsageRow>& rows);

/// sigma(e) rho(e)^(p-1) / modulus: the usage every optimal pmf must have.
EdgeVector optimal_edge_usage(const Density& rho, double p, const EdgeVector& sigma,
                              double modulus);

/// Lower bound on Mod_{p,sigma}(stars) from the uniform pmf:
/// (|V|/2)^p * (sum sigma^(-q/p))^(-p/q).
double uniform_star_lower_bound(const Graph& g, double p, const EdgeVector& sigma);

}  // namespace modkit
