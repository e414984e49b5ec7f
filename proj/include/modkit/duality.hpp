#pragma once

#include <string>

#include "modkit/families.hpp"
#include "modkit/solver.hpp"

namespace modkit {

/// q with 1/p + 1/q = 1. Throws DomainError unless 1 < p < infinity.
double conjugate_exponent(double p);

/// sigma_hat(e) = sigma(e)^(-q/p).
EdgeVector dual_weights(const EdgeVector& sigma, double p);

struct DualResult {
  /// Mod_{p,sigma}(fec).
  double primal_modulus = 0.0;
  /// Mod_{q,sigma_hat}(stars).
  double dual_modulus = 0.0;
  double p = 2.0;
  double q = 2.0;
  EdgeVector sigma_hat;
  /// Extremal density of the fractional edge covers.
  Density eta_star;
  /// primal^(1/p) * dual^(1/q) - 1.
  double product_deviation = 0.0;
  /// The star solve the result was derived from.
  ModulusResult star_result;
};

/// Mod_{p,sigma} of fractional edge covers through the star family with
/// exponent q and weights sigma^(-q/p).
DualResult fec_modulus_via_stars(const Graph& g, double p, const EdgeVector& sigma,
                                 double tol = kDefaultTolerance);
DualResult fec_modulus_via_stars(const Graph& g, double p,
                                 double tol = kDefaultTolerance);

struct ReciprocalReport {
  double modulus = 0.0;
  double dual_modulus = 0.0;
  double p = 2.0;
  double q = 2.0;
  double product = 0.0;
  double deviation = 0.0;
  bool ok = false;
  /// Empty unless a solve failed.
  std::string error;
};

/// Solves Mod_{p,sigma}(family) and Mod_{q,sigma_hat}(dual_family), in
/// parallel, and reports Mod^(1/p) * Mod_hat^(1/q). Never throws; failures
/// land in the report.
ReciprocalReport verify_reciprocal(const Graph& g, const FamilyOracle& family,
                                   const FamilyOracle& dual_family, double p,
                                   const EdgeVector& sigma,
                                   double tol = kDefaultTolerance,
                                   double tolerance = 1e-6);

/// Endpoint case of the reciprocal identity:
/// Mod_{1,sigma}(family) * Mod_{inf,1/sigma}(blocker) = 1. Given one side,
/// returns the other.
double endpoint_dual_modulus(double modulus);

}  // namespace modkit
