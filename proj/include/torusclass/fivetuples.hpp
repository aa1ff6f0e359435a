#pragma once

// Admissible 5-tuples (psi, N, (A_i), (B_i), (a_ij)) over the catalog bases:
// validation, equivalence, the one-factor reduce/expand correspondence,
// realization as manifold expressions and flag propagation.
//
// A tuple always stores the data of every factor of its spec. The factors
// with index >= `active` are folded into the base: they are not tuple
// factors, their data describes how the base N was built from the catalog.
// reduce() folds the last tuple factor, expand() unfolds it again.

#include <string>
#include <utility>
#include <vector>

#include "torusclass/liegroups.hpp"
#include "torusclass/locus.hpp"
#include "torusclass/manifolds.hpp"

namespace torus {

struct FiveTuple {
  /// Normalized: SU factors first, then SO(odd); no SO(even) and no torus factors.
  GroupSpec spec;
  /// One weight vector (length l0) per SU factor.
  std::vector<Weights> psi;
  /// Catalog base with one Z2 tag row per SO factor.
  CatalogBase base;
  /// Codim-2 loci, one per SU factor.
  std::vector<Locus> A;
  /// Codim-1 loci, one per SO factor.
  std::vector<Locus> B;
  /// a[i][j] for SO slots i < j; entries on and below the diagonal are 0.
  std::vector<std::vector<int>> a;
  /// Number of leading factors that are tuple factors; the rest are folded.
  int active = 0;

  int k() const { return static_cast<int>(spec.factors.size()); }
  int k0() const { return static_cast<int>(psi.size()); }
  int slots() const { return k() - k0(); }

  friend bool operator==(const FiveTuple&, const FiveTuple&) = default;
};

/// Assembles an unfolded tuple; `a` may be left empty for all zeros. Throws
/// InputError when the data does not fit the spec's shape.
FiveTuple make_tuple(GroupSpec spec, std::vector<Weights> psi, CatalogBase base,
                     std::vector<Locus> A, std::vector<Locus> B,
                     std::vector<std::vector<int>> a = {});

struct Violation {
  /// Clause label: "shape", "1", "3", "3 kernel", "4", "4 nontrivial",
  /// "5(a)(i)", "5(a)(ii)", "5(a)(iii)", "5(b) parity", "5(c)",
  /// "transversality A", "transversality B"; folded factors are prefixed "base ".
  std::string clause;
  /// 1-based factor index.
  int factor = 0;
  std::string detail;
};

std::vector<Violation> validate(const FiveTuple& t);
inline bool is_valid(const FiveTuple& t) { return validate(t).empty(); }

/// Clauses for the tuple factors below `level`, treating every factor at or
/// past `level` as folded into the base.
std::vector<Violation> check_level(const FiveTuple& t, int level);

/// Representative string of the equivalence class: the minimum serialization
/// over the base automorphisms, with psi sign-normalized on SU(2) factors.
std::string canonical_key(const FiveTuple& t);

/// Throws InputError when the tuples belong to different specs.
bool equivalent(const FiveTuple& t1, const FiveTuple& t2);

/// Folds the last tuple factor into the base. Throws InputError on an invalid
/// tuple or one without tuple factors.
FiveTuple reduce(const FiveTuple& t);

/// Unfolds the first folded factor. Throws InputError when nothing is folded
/// or the result violates a clause of its new factor.
FiveTuple expand(const FiveTuple& t);

/// The base as a manifold, with each active SO factor's Z2 action on it.
struct BaseView {
  ManifoldExpr expr = ManifoldExpr::point();
  std::vector<Z2ActionTag> slot_actions;
  std::string name;
};
BaseView base_view(const FiveTuple& t);

/// The manifold of the whole tuple (folded factors included). Throws
/// InputError on an invalid tuple.
ManifoldExpr realize(const FiveTuple& t);

struct PropagationFlags {
  bool quasitoric = false;
  bool cohomology_deg2 = false;
  Tri simply_connected = Tri::Unknown;
};
PropagationFlags propagate_flags(const FiveTuple& t);

/// Ordered (field, value) pairs: spec, psi, base, A, B, a.
std::vector<std::pair<std::string, std::string>> fields(const FiveTuple& t);
/// "spec=...; psi=...; base=...; A=...; B=...; a=..."
std::string serialize(const FiveTuple& t);

/// The spec of the tuple factors only (folded factors dropped).
GroupSpec active_spec(const FiveTuple& t);

}  // namespace torus
