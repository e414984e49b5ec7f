#include "modkit/probability.hpp"

#include <cmath>
#include <unordered_map>

#include "modkit/duality.hpp"
#include "modkit/errors.hpp"

namespace modkit {

Pmf pmf_from_result(const ModulusResult& result) {
  double total = 0.0;
  for (double l : result.lambda) total += l;
  if (!(total > 0.0)) throw DegenerateResult("multipliers sum to zero");
  Pmf pmf;
  for (std::size_t i = 0; i < result.active_rows.size(); ++i) {
    pmf.labels.push_back(result.active_rows[i].label);
    pmf.mass.push_back(result.lambda[i] / total);
  }
  return pmf;
}

namespace {

std::vector<const UsageRow*> match_rows(const Pmf& pmf,
                                        const std::vector<UsageRow>& rows) {
  if (pmf.labels.size() != pmf.mass.size()) throw DomainError("malformed pmf");
  std::unordered_map<std::string, const UsageRow*> by_label;
  for (const auto& row : rows) by_label.emplace(row.label, &row);
  std::vector<const UsageRow*> out;
  for (const auto& label : pmf.labels) {
    auto it = by_label.find(label);
    if (it == by_label.end()) throw DomainError("pmf object '" + label + "' not among rows");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

EdgeVector expected_edge_usage(const Pmf& pmf, const std::vector<UsageRow>& rows) {
  auto matched = match_rows(pmf, rows);
  if (rows.empty()) return {};
  EdgeVector out(rows.front().usage.size(), 0.0);
  for (std::size_t i = 0; i < matched.size(); ++i) {
    const auto& u = matched[i]->usage;
    if (u.size() != out.size()) throw DomainError("rows differ in dimension");
    for (std::size_t e = 0; e < u.size(); ++e) out[e] += pmf.mass[i] * u[e];
  }
  return out;
}

double expected_overlap(const Pmf& pmf, const std::vector<UsageRow>& rows) {
  for (const auto& row : rows) {
    for (double x : row.usage) {
      if (x != 0.0 && x != 1.0) {
        throw DomainError("row '" + row.label + "' is not an edge set");
      }
    }
  }
  double total = 0.0;
  for (double x : expected_edge_usage(pmf, rows)) total += x * x;
  return total;
}

EdgeVector optimal_edge_usage(const Density& rho, double p, const EdgeVector& sigma,
                              double modulus) {
  if (rho.size() != sigma.size()) throw DomainError("density and weights differ in size");
  if (!(modulus > 0.0)) throw DomainError("modulus must be positive");
  EdgeVector out(rho.size());
  for (std::size_t e = 0; e < rho.size(); ++e) {
    out[e] = sigma[e] * std::pow(rho[e], p - 1.0) / modulus;
  }
  return out;
}

double uniform_star_lower_bound(const Graph& g, double p, const EdgeVector& sigma) {
  const double q = conjugate_exponent(p);
  double dual_total = 0.0;
  for (double s : dual_weights(sigma, p)) dual_total += s;
  return std::pow(static_cast<double>(g.num_vertices()) / 2.0, p) *
         std::pow(dual_total, -p / q);
}

}  // namespace modkit
