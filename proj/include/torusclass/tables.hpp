#pragma once

// The reference tables the engine reproduces: three static fact tables for
// elementary factors and four classification tables.

#include <string>
#include <vector>

#include "torusclass/liegroups.hpp"

namespace torus {

struct ReferenceTable {
  std::string id;  // file stem of the golden copy, e.g. "four_dim"
  std::string text;
};

/// All seven tables in a fixed order. Deterministic byte for byte.
std::vector<ReferenceTable> reference_tables();

/// Factors listed in the static tables, in table order.
std::vector<GroupFactor> table_factors(bool include_spin4);

/// Specs of the codimension-one-orbit table and of the 4-dimensional table.
std::vector<std::string> codim_one_specs();
std::vector<std::string> four_dim_specs();

}  // namespace torus
