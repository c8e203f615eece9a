#ifndef LIECHECK_CATALOG_HPP
#define LIECHECK_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "liecheck/lie_algebra.hpp"

namespace liecheck {

/// The three-dimensional real Lie algebras, by their standard names,
/// plus the six-dimensional realification of the complex Heisenberg
/// algebra.  r3_lambda takes lambda, r3p_eta takes eta.
enum class CatalogName {
  h1,
  r3,
  r3_lambda,
  r3p_eta,
  sl2,
  so3,
  h1_complexified_real,
};

struct CatalogEntry {
  CatalogName name;
  std::optional<Rational> param;
};

/// Canonical-form conventions are |lambda| <= 1 and eta >= 0; values
/// outside the range still produce a valid algebra but set the warning.
struct CatalogResult {
  LieAlgebra algebra;
  std::optional<std::string> warning;
};

CatalogResult catalog(const CatalogEntry& entry);

std::string catalog_name_string(CatalogName n);
std::optional<CatalogName> parse_catalog_name(const std::string& s);
std::vector<CatalogName> catalog_names();

} // namespace liecheck

#endif
