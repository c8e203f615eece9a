#include "liecheck/catalog.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

CatalogResult catalog(const CatalogEntry& entry) {
  std::optional<std::string> warning;
  auto need_param = [&]() -> Rational {
    if (!entry.param) throw MissingParameter(catalog_name_string(entry.name));
    return *entry.param;
  };

  switch (entry.name) {
    case CatalogName::h1:
      return {LieAlgebra(3, {}, {{0, 1, 2, 1}}), warning};
    case CatalogName::r3:
      // [e1,e2]=e2, [e1,e3]=e2+e3
      return {LieAlgebra(3, {}, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1}}), warning};
    case CatalogName::r3_lambda: {
      Rational lambda = need_param();
      if (abs(lambda) > 1)
        warning = "canonical form convention expects |lambda| <= 1";
      std::vector<BracketEntry> t = {{0, 1, 1, 1}};
      if (lambda != 0) t.push_back({0, 2, 2, lambda});
      return {LieAlgebra(3, {}, std::move(t)), warning};
    }
    case CatalogName::r3p_eta: {
      Rational eta = need_param();
      if (eta < 0) warning = "canonical form convention expects eta >= 0";
      // [e1,e2]=eta e2 - e3, [e1,e3]= e2 + eta e3
      std::vector<BracketEntry> t = {{0, 1, 2, -1}, {0, 2, 1, 1}};
      if (eta != 0) {
        t.push_back({0, 1, 1, eta});
        t.push_back({0, 2, 2, eta});
      }
      return {LieAlgebra(3, {}, std::move(t)), warning};
    }
    case CatalogName::sl2:
      // [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2
      return {LieAlgebra(3, {},
                         {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}}),
              warning};
    case CatalogName::so3:
      // [e1,e2]=e3, [e3,e1]=e2, [e3,e2]=-e1
      return {LieAlgebra(3, {},
                         {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 0, 1}}),
              warning};
    case CatalogName::h1_complexified_real:
      // basis x, y, z, Jx, Jy, Jz:
      // [x,y]=z, [Jx,y]=Jz, [x,Jy]=Jz, [Jx,Jy]=-z
      return {LieAlgebra(6, {},
                         {{0, 1, 2, 1},   // [e1,e2]=e3
                          {1, 3, 5, -1},  // [e4,e2]=e6
                          {0, 4, 5, 1},   // [e1,e5]=e6
                          {3, 4, 2, -1}}),
              warning};
  }
  throw MissingParameter("unknown catalog entry");
}

std::string catalog_name_string(CatalogName n) {
  switch (n) {
    case CatalogName::h1: return "h1";
    case CatalogName::r3: return "r3";
    case CatalogName::r3_lambda: return "r3_lambda";
    case CatalogName::r3p_eta: return "r3p_eta";
    case CatalogName::sl2: return "sl2";
    case CatalogName::so3: return "so3";
    case CatalogName::h1_complexified_real: return "h1_complexified_real";
  }
  return "?";
}

std::optional<CatalogName> parse_catalog_name(const std::string& s) {
  for (CatalogName n : catalog_names())
    if (catalog_name_string(n) == s) return n;
  return std::nullopt;
}

std::vector<CatalogName> catalog_names() {
  return {CatalogName::h1,  CatalogName::r3,  CatalogName::r3_lambda,
          CatalogName::r3p_eta, CatalogName::sl2, CatalogName::so3,
          CatalogName::h1_complexified_real};
}

} // namespace liecheck
