#pragma once

#include "psc/diagram.hpp"
#include "psc/lie_algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace psc {

/// Abelian algebra t^k.
LieAlgebra torus_algebra(std::size_t k);
/// su(2) with [e1,e2] = e3 and cyclic; Q = -1/2 Killing form.
LieAlgebra su2_algebra();
/// Orthogonal direct sum (block structure constants).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string label);

using CatalogEntry = std::variant<LieAlgebra, GroupDiagram, HomogeneousPair>;

struct CatalogItem {
  std::string name;
  std::string description;
};

class UnknownCatalogEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Every catalog name with a one-line description, in listing order.
const std::vector<CatalogItem>& catalog_items();

/// Looks up an algebra ("su2", "t3", ...), a diagram ("diagram:...") or a
/// homogeneous pair ("homogeneous:..."). Throws UnknownCatalogEntry.
CatalogEntry catalog_lookup(std::string_view name);

LieAlgebra catalog_algebra(std::string_view name);
GroupDiagram catalog_diagram(std::string_view name);
HomogeneousPair catalog_pair(std::string_view name);

}  // namespace psc
