#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit {

using Rational = boost::rational<long long>;

enum class ObjectFamily { Star, EdgeCover, FractionalCover };

/// "star"/"stars", "ec", "fec". Throws DomainError otherwise.
ObjectFamily parse_object_family(std::string_view name);
std::string_view to_string(ObjectFamily family);

/// Mod_2 with unit weights, for:
///   star, cycle, complete graphs with any of the three families;
///   path and wheel graphs with the star family.
/// Throws DomainError for anything else.
Rational closed_form_modulus(StandardKind kind, int n, ObjectFamily family);

/// Optimal expected usage of the bridge of the n-barbell, p = 2, for ec or
/// fec. n = 3 is a special case with no formula and throws DomainError, as
/// does n < 3 or the star family.
Rational barbell_bridge_usage(int n, ObjectFamily family);

/// Mod_2(ec) / Mod_2(fec) on K_n.
Rational ec_fec_ratio_complete(int n);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct OracleEntry {
  /// "modulus", "bridge_usage" or "ec_fec_ratio".
  std::string quantity;
  StandardKind kind;
  int n;
  ObjectFamily family;
  double p = 2.0;
  Rational value;
};

/// Every supported value for sizes n_min..n_max (bridge usages start at 4).
std::vector<OracleEntry> oracle_table(int n_min = 3, int n_max = 10);

}  // namespace modkit
