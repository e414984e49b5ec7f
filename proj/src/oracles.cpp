#include "modkit/oracles.hpp"

#include "modkit/errors.hpp"

namespace modkit {

ObjectFamily parse_object_family(std::string_view name) {
  if (name == "star" || name == "stars") return ObjectFamily::Star;
  if (name == "ec") return ObjectFamily::EdgeCover;
  if (name == "fec") return ObjectFamily::FractionalCover;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(ObjectFamily family) {
  switch (family) {
    case ObjectFamily::Star:
      return "star";
    case ObjectFamily::EdgeCover:
      return "ec";
    case ObjectFamily::FractionalCover:
      return "fec";
  }
  return "";
}

namespace {

[[noreturn]] void unsupported(StandardKind kind, int n, ObjectFamily family) {
  throw DomainError("no closed form for " + std::string(to_string(kind)) + ":" +
                    std::to_string(n) + " with family " +
                    std::string(to_string(family)));
}

}  // namespace

Rational closed_form_modulus(StandardKind kind, int n, ObjectFamily family) {
  using R = Rational;
  const long long m = n;
  const bool even = n % 2 == 0;
  if (n < 3) unsupported(kind, n, family);
  switch (kind) {
    case StandardKind::Star:
      if (family == ObjectFamily::Star) return R(m - 1);
      return R(1, m - 1);
    case StandardKind::Cycle:
      if (family == ObjectFamily::Star) return R(m, 4);
      if (family == ObjectFamily::FractionalCover || even) return R(4, m);
      return R(4 * m, (m + 1) * (m + 1));
    case StandardKind::Complete:
      if (family == ObjectFamily::Star) return R(m, 2 * (m - 1));
      if (family == ObjectFamily::FractionalCover || even) return R(2 * (m - 1), m);
      return R(2 * m * (m - 1), (m + 1) * (m + 1));
    case StandardKind::Path:
      if (family != ObjectFamily::Star) break;
      if (n <= 4) return R(2);
      if (!even) return R(m + 5, 4);
      return R(m * m + 2 * m - 16, 2 * (2 * m - 6));
    case StandardKind::Wheel:
      if (family != ObjectFamily::Star || n < 4) break;
      if (n <= 5) return R(4 + (m - 2) * (m - 2), 4 * (m - 1));
      return R(m - 1, 5);
    case StandardKind::Barbell:
      break;
  }
  unsupported(kind, n, family);
}

Rational barbell_bridge_usage(int n, ObjectFamily family) {
  if (n == 3) throw DomainError("3-barbell is a special case with no formula");
  if (n < 3) throw DomainError("barbell needs n >= 4");
  const long long m = n;
  switch (family) {
    case ObjectFamily::FractionalCover:
      return Rational(2 * m + 2, m * m - m + 4);
    case ObjectFamily::EdgeCover:
      if (n % 2 == 0) return Rational(0);
      return Rational(m - 2, m * m - m - 1);
    case ObjectFamily::Star:
      break;
  }
  throw DomainError("bridge usage is given for ec and fec only");
}

Rational ec_fec_ratio_complete(int n) {
  if (n < 3) throw DomainError("complete graph ratio needs n >= 3");
  if (n % 2 == 0) return Rational(1);
  const long long m = n;
  return Rational(m * m, (m + 1) * (m + 1));
}

std::vector<OracleEntry> oracle_table(int n_min, int n_max) {
  std::vector<OracleEntry> out;
  const ObjectFamily all[] = {ObjectFamily::Star, ObjectFamily::EdgeCover,
                              ObjectFamily::FractionalCover};
  for (StandardKind kind : {StandardKind::Star, StandardKind::Cycle,
                            StandardKind::Complete, StandardKind::Path,
                            StandardKind::Wheel}) {
    for (ObjectFamily family : all) {
      for (int n = n_min; n <= n_max; ++n) {
        try {
          out.push_back({"modulus", kind, n, family, 2.0,
                         closed_form_modulus(kind, n, family)});
        } catch (const DomainError&) {
        }
      }
    }
  }
  for (ObjectFamily family : {ObjectFamily::EdgeCover, ObjectFamily::FractionalCover}) {
    for (int n = std::max(n_min, 4); n <= n_max; ++n) {
      out.push_back({"bridge_usage", StandardKind::Barbell, n, family, 2.0,
                     barbell_bridge_usage(n, family)});
    }
  }
  for (int n = std::max(n_min, 3); n <= n_max; ++n) {
    out.push_back({"ec_fec_ratio", StandardKind::Complete, n,
                   ObjectFamily::EdgeCover, 2.0, ec_fec_ratio_complete(n)});
  }
  return out;
}

}  // namespace modkit
