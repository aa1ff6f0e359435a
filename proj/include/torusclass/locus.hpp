#pragma once

// Catalog bases for the classification (a point or a product of at most two
// 2-spheres, each rotated by its own circle) and their invariant submanifolds.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torusclass/liegroups.hpp"

namespace torus {

/// An involution of S^2 commuting with the rotation about the polar axis.
/// Antipodal is free; Reflection fixes the equator. Both swap the poles and
/// reverse orientation.
enum class Z2Tag : std::uint8_t { Trivial, Antipodal, Reflection };

const char* to_string(Z2Tag t);

/// Per-S^2-factor piece of a locus component.
enum class Piece : std::uint8_t { Whole, North, South, Equator };

/// A connected invariant submanifold of (S^2)^n: a product of pieces.
struct LocusComponent {
  std::vector<Piece> pieces;

  int dim() const;
  int codim() const;
  std::int64_t euler() const;

  friend auto operator<=>(const LocusComponent&, const LocusComponent&) = default;
};

/// Component intersection; nullopt when disjoint.
std::optional<LocusComponent> intersect(const LocusComponent& a, const LocusComponent& b);

/// A closed invariant submanifold of a catalog base, stored as its sorted set
/// of connected components. The empty locus has no components.
class Locus {
public:
  Locus() = default;
  explicit Locus(std::vector<LocusComponent> components);

  static Locus empty() { return {}; }
  static Locus whole(int factors);

  bool is_empty() const { return comps_.empty(); }
  const std::vector<LocusComponent>& components() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  bool connected() const { return comps_.size() <= 1; }

  /// Common codimension of all components; nullopt if empty or mixed.
  std::optional<int> codim() const;
  /// Components pairwise disjoint, so the union is a closed submanifold.
  bool is_submanifold() const;
  std::int64_t euler() const;

  Locus intersect(const Locus& other) const;
  bool shares_component(const Locus& other) const;

  /// Image under a Z2 action given per factor.
  Locus image(const std::vector<Z2Tag>& tags) const;
  /// Image under swapping the poles of the factors whose mask bit is set.
  Locus swap_poles(unsigned mask) const;
  /// Pointwise fixed by the Z2 action.
  bool pointwise_fixed_by(const std::vector<Z2Tag>& tags) const;
  /// Pointwise fixed by the circle t -> (t^w_1, ..., t^w_n).
  bool fixed_by_circle(const Weights& w) const;

  /// "{N}", "{N,S}", "{E}" on one factor; "{(N,W),(S,W)}" on two.
  std::string to_string() const;

  friend auto operator<=>(const Locus&, const Locus&) = default;

private:
  std::vector<LocusComponent> comps_;
};

/// All loci of the given codimension made of pairwise disjoint components,
/// in deterministic order (empty locus first).
std::vector<Locus> loci_of_codim(int factors, int codim);

/// A catalog base N: (S^2)^l0 with the standard T^l0 action and, for every
/// SO(odd) factor slot, a Z2 action given by one tag per S^2 factor.
struct CatalogBase {
  int l0 = 0;
  std::vector<std::vector<Z2Tag>> slot_tags;

  int dim() const { return 2 * l0; }
  int slots() const { return static_cast<int>(slot_tags.size()); }
  bool slot_nontrivial(int slot) const;
  bool slot_reverses_orientation(int slot) const;
  /// The catalog automorphisms commuting with all recorded actions are the
  /// per-factor pole swaps; this is their count (2^l0).
  unsigned automorphism_count() const { return 1u << l0; }

  /// "pt", "S^2", "S^2_1", "S^2_2", "S^2 x S^2", or with several slots e.g. "S^2[A;R]".
  std::string to_string() const;

  friend auto operator<=>(const CatalogBase&, const CatalogBase&) = default;
};

}  // namespace torus
