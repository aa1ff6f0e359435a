#pragma once

// Catalog of compact Lie group factors, the normalization conventions used
// before classification, and the static fact tables for elementary factors.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torus {

enum class FactorKind { SU, SO, Spin, Sp, Torus };

/// One factor of a covering group. `n` is the matrix size for SU(n), SO(n),
/// Spin(n), the quaternionic rank for Sp(n), and the rank for a torus.
struct GroupFactor {
  FactorKind kind = FactorKind::SU;
  int n = 2;
  /// Explicit number of characteristic submanifolds permuted by the factor,
  /// where the factor admits two values (SU(2)/Spin(3), SU(4)/Spin(6)).
  std::optional<int> f_count;

  static GroupFactor su(int n) { return {FactorKind::SU, n, std::nullopt}; }
  static GroupFactor so(int n) { return {FactorKind::SO, n, std::nullopt}; }
  static GroupFactor spin(int n) { return {FactorKind::Spin, n, std::nullopt}; }
  static GroupFactor sp(int n) { return {FactorKind::Sp, n, std::nullopt}; }
  static GroupFactor torus(int rank) { return {FactorKind::Torus, rank, std::nullopt}; }

  int rank() const;
  bool is_su() const { return kind == FactorKind::SU; }
  bool is_so_odd() const { return kind == FactorKind::SO && n % 2 == 1; }
  bool is_so_even() const { return kind == FactorKind::SO && n % 2 == 0; }
  /// The `l` of SU(l+1), SO(2l+1), SO(2l), Spin(n), Sp(l).
  int ell() const;

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// A covering group written as a product of factors times a torus T^l0.
struct GroupSpec {
  std::vector<GroupFactor> factors;
  int l0 = 0;

  int rank() const;
  int su_count() const;
  int so_odd_count() const;
  int so_even_count() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string to_string(const GroupFactor& f);
/// Renders the spec grammar form, e.g. "SU(2)xSO(5)xT^1".
std::string to_string(const GroupSpec& spec);

/// Parses `FACTOR ("x" FACTOR)* ("x" "T^" INT)?`, FACTOR being SU(n), SO(n),
/// Spin(n) or Sp(n) with an optional `#k` convention suffix. A bare "T^k" is
/// a pure torus. Throws InputError carrying the column of the failure.
GroupSpec parse_group_spec(std::string_view text);

// Fact tables for non-torus factors. Inputs are interpreted by isomorphism
// type (SU(2) = Spin(3) = Sp(1), Spin(5) = Sp(2), SU(4) = Spin(6)); SO(n)
// is looked up as Spin(n).

std::set<int> possible_F_sizes(const GroupFactor& factor);

struct RepDims {
  int real = 0;
  int complex = 0;
  friend bool operator==(const RepDims&, const RepDims&) = default;
};
RepDims min_rep_dims(const GroupFactor& factor);

struct MaxRankSubgroup {
  std::string name;
  int codim = 0;
  friend bool operator==(const MaxRankSubgroup&, const MaxRankSubgroup&) = default;
};
MaxRankSubgroup max_rank_subgroup(const GroupFactor& factor);

struct NormalizeOptions {
  /// Replace each SO(2l) by SU(l) and add one circle to the torus.
  bool reduce_so_even = false;
};

/// Spin(n) -> SO(n) and the two-valued table rows resolved through the
/// convention flags; Sp(1) -> SU(2), Sp(2) -> SO(5), Sp(l>2) rejected.
/// Output factors are ordered SU first, then SO(odd), then SO(even), each
/// group keeping input order. Idempotent.
GroupSpec normalize_spec(const GroupSpec& spec, NormalizeOptions opts = {});

/// l0 plus the number of SO(2l) factors.
int orbit_space_dim(const GroupSpec& spec);

/// A homomorphism S(U(l)xU(1)) -> T^l0, written through the abelianization
/// character as an integer weight vector (one per SU factor).
using Weights = std::vector<std::int64_t>;

/// True iff the kernel of the character with these weights is SU(l), i.e.
/// the weight vector is primitive. The zero vector (and l0 = 0) gives false.
bool psi_kernel_is_su(const Weights& w);

}  // namespace torus
