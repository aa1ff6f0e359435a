#pragma once

// Enumeration of admissible 5-tuples over the catalog bases and the
// resulting classification tables.

#include <optional>
#include <string>
#include <vector>

#include "torusclass/fivetuples.hpp"
#include "torusclass/liegroups.hpp"
#include "torusclass/manifolds.hpp"

namespace torus {

inline constexpr int kMaxCatalogTorusRank = 2;
inline constexpr int kDefaultPsiBound = 1;

struct CatalogEntry {
  ManifoldExpr expr;
  CatalogBase base;
};

/// Every catalog base (S^2)^l0 with one Z2 tag per S^2 factor and slot.
/// Throws UnsupportedError unless 0 <= l0 <= 2.
std::vector<CatalogEntry> base_catalog(int l0, int z2_slots);

struct ClassifyOptions {
  /// Weight entries range over [-psi_bound, psi_bound].
  int psi_bound = kDefaultPsiBound;
  /// Trade each SO(2l) for SU(l) x S^1 before enumerating.
  bool reduce_so_even = false;
};

/// One representative per equivalence class, sorted by manifold name and then
/// by tuple key. `spec` is normalized first. Throws UnsupportedError for
/// SO(2l) factors left after normalization or l0 beyond the catalog.
std::vector<FiveTuple> enumerate_tuples(const GroupSpec& spec, const ClassifyOptions& opts = {});

struct ClassRow {
  FiveTuple tuple;
  std::string name;
  Affine chi;
  int dim = 0;
  int orbit_space_dim = 0;
  PropagationFlags flags;
  /// False for rows outside the ranges covered by published tables.
  bool verified = false;
};

struct Classification {
  GroupSpec input;
  GroupSpec normalized;
  std::vector<ClassRow> rows;
};

Classification classify(const GroupSpec& spec, const ClassifyOptions& opts = {});

/// The simply connected answer for SO(2l1) x T^1 and SO(2l1) x SO(2l2):
/// the connected sums #_k of the product of spheres (k >= 1) and one sphere.
struct FamilyAnswer {
  GroupSpec spec;
  ManifoldExpr family = ManifoldExpr::point();
  ManifoldExpr sphere = ManifoldExpr::point();
  Affine chi;
  std::string description;
};

/// Throws UnsupportedError for any other spec shape.
FamilyAnswer family_answer(const GroupSpec& spec);

/// Human-readable table, one line per class.
std::string render(const Classification& c);
std::string render(const FamilyAnswer& f);

}  // namespace torus
