#include "modkit/duality.hpp"

#include <cmath>
#include <future>

#include "modkit/errors.hpp"

namespace modkit {

double conjugate_exponent(double p) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw DomainError("conjugate exponent needs 1 < p < infinity, got " +
                      std::to_string(p));
  }
  return p / (p - 1.0);
}

EdgeVector dual_weights(const EdgeVector& sigma, double p) {
  const double q = conjugate_exponent(p);
  EdgeVector out(sigma.size());
  for (std::size_t e = 0; e < sigma.size(); ++e) {
    if (!(sigma[e] > 0.0)) throw DomainError("weights must be positive");
    out[e] = std::pow(sigma[e], -q / p);
  }
  return out;
}

DualResult fec_modulus_via_stars(const Graph& g, double p, const EdgeVector& sigma,
                                 double tol) {
  DualResult out;
  out.p = p;
  out.q = conjugate_exponent(p);
  out.sigma_hat = dual_weights(sigma, p);
  out.star_result = basic_algorithm(star_family(g), out.q, out.sigma_hat, tol);
  out.dual_modulus = out.star_result.modulus;
  out.primal_modulus = std::pow(out.dual_modulus, -p / out.q);
  out.eta_star.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out.eta_star[e] = out.sigma_hat[e] *
                      std::pow(out.star_result.rho_star[e], out.q - 1.0) /
                      out.dual_modulus;
  }
  out.product_deviation = std::pow(out.primal_modulus, 1.0 / p) *
                              std::pow(out.dual_modulus, 1.0 / out.q) -
                          1.0;
  return out;
}

DualResult fec_modulus_via_stars(const Graph& g, double p, double tol) {
  return fec_modulus_via_stars(g, p, g.sigma(), tol);
}

ReciprocalReport verify_reciprocal(const Graph& g, const FamilyOracle& family,
                                   const FamilyOracle& dual_family, double p,
                                   const EdgeVector& sigma, double tol,
                                   double tolerance) {
  ReciprocalReport report;
  report.p = p;
  try {
    report.q = conjugate_exponent(p);
    if (sigma.size() != g.num_edges()) throw DomainError("weights do not match graph");
    EdgeVector sigma_hat = dual_weights(sigma, p);
    auto primal = std::async(std::launch::async, [&] {
      return basic_algorithm(family, p, sigma, tol).modulus;
    });
    auto dual = std::async(std::launch::async, [&] {
      return basic_algorithm(dual_family, report.q, sigma_hat, tol).modulus;
    });
    report.modulus = primal.get();
    report.dual_modulus = dual.get();
    report.product = std::pow(report.modulus, 1.0 / p) *
                     std::pow(report.dual_modulus, 1.0 / report.q);
    report.deviation = report.product - 1.0;
    report.ok = std::abs(report.deviation) <= tolerance;
  } catch (const std::exception& e) {
    report.error = e.what();
    report.ok = false;
  }
  return report;
}

double endpoint_dual_modulus(double modulus) {
  if (!(modulus > 0.0)) throw DomainError("modulus must be positive");
  return 1.0 / modulus;
}

}  // namespace modkit
