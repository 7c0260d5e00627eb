#pragma once
// Named links, twist families and mutant pairs, each with a stored Alexander polynomial.

#include <string>
#include <variant>
#include <vector>

#include "kfh/braid.hpp"
#include "kfh/grid.hpp"
#include "kfh/poly.hpp"

namespace kfh {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CatalogValue = std::variant<BraidWord, GridDiagram, TwistFamilySpec, MutantPairSpec>;

struct CatalogEntry {
  std::string name;
  CatalogValue value;
  // the link itself; the base L_1 for twist families; both members for mutant pairs
  HalfLaurent expected_alexander;
  std::string note;
};

// keys, with parametrized ones written as torus(2,k), KT_family(n), C_family(n)
std::vector<std::string> catalog_names();

// throws CatalogError listing the available keys for unknown names
CatalogEntry catalog(const std::string& name);

// recomputes the Alexander polynomial of an entry and compares with the stored one
bool catalog_self_test(const CatalogEntry& e, std::string* detail = nullptr);

}  // namespace kfh
