#pragma once

// Signed-permutation models of Weyl groups acting on an indexed, oriented set
// of characteristic submanifolds, and detection of elementary factor types
// from such an action.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torusclass/liegroups.hpp"

namespace torus::weyl {

/// g(e_i) = signs[i] * e_{perm[i]}. Indices are 0-based internally; the text
/// form and examples use 1-based letters.
class SignedPermutation {
public:
  SignedPermutation() = default;
  /// Throws InputError unless `perm` is a bijection of {0..m-1} and every sign is +-1.
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  static SignedPermutation identity(int degree);
  /// f_{ij+} (positive = true) or f_{ij-}, 0-based letters.
  static SignedPermutation swap(int degree, int i, int j, bool positive);
  /// g_i: fixes every letter, reverses the orientation of letter i.
  static SignedPermutation flip(int degree, int i);

  int degree() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  /// Sum of signs over fixed letters: the trace of the signed permutation matrix.
  int signed_trace() const;
  bool is_identity() const;
  /// Smallest n >= 1 with g^n = id.
  int order() const;
  SignedPermutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  /// Lexicographic on (one-line permutation, sign sequence).
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.signs_ <=> b.signs_;
  }

private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// Apply b, then a.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

struct ReflectionGroup {
  int degree = 0;
  std::vector<SignedPermutation> generators;
  /// Sorted, closed under composition; contains the identity.
  std::vector<SignedPermutation> elements;
  std::size_t size_cap = kDefaultSizeCap;

  std::size_t order() const { return elements.size(); }
};

/// Closure of the generators. Throws CapExceededError past `size_cap`
/// elements and InputError on mixed degrees.
ReflectionGroup enumerate_group(std::span<const SignedPermutation> generators, int degree,
                                std::size_t size_cap = kDefaultSizeCap);

enum class ReflectionType { Type1, Type2, Type3, NotReflection };

const char* to_string(ReflectionType t);

ReflectionType classify_reflection(const SignedPermutation& g);

/// Every element that is a reflection, in group order.
std::vector<SignedPermutation> reflections(const ReflectionGroup& group);

struct OrbitPartition {
  /// Letters fixed with sign +1 by every element.
  std::vector<int> fixed_preserved;
  /// Remaining letters grouped into orbits, each sorted, ordered by least letter.
  std::vector<std::vector<int>> orbits;
};

OrbitPartition orbit_partition(const ReflectionGroup& group);

/// Number of reflections w with w(j1) = j2. Throws InputError if j1 == j2 or
/// the letters lie in different orbits.
int reflection_count_between(const ReflectionGroup& group, int j1, int j2);

struct ElementaryType {
  GroupFactor factor;  // SU(l+1), SO(2l+1) or SO(2l)
  int f_count = 0;     // size of the orbit it permutes
  friend bool operator==(const ElementaryType&, const ElementaryType&) = default;
};

/// Reads off the elementary factor acting on one non-fixed orbit. Throws
/// InputError when the reflection counts are not constant on the orbit.
ElementaryType detect_factor_type(const ReflectionGroup& group, std::span<const int> orbit);

/// Standard generators of W(factor) acting on the letters `indices` of a set
/// of size `degree`: f_{ij+} for SU; f_{ij+-} for SO(2l); f_{ij+-} and g_1 for
/// SO(2l+1) and Sp(l). Spin(n) is treated as SO(n). The number of letters
/// must be l+1 for SU(l+1) and l otherwise.
ReflectionGroup weyl_group_of(const GroupFactor& factor, int degree, std::span<const int> indices,
                              std::size_t size_cap = kDefaultSizeCap);

/// Convenience: W(factor) on its own letters 0..n-1.
ReflectionGroup weyl_group_of(const GroupFactor& factor);

/// Subgroup generated by the reflections that move only letters of `orbit`.
ReflectionGroup orbit_reflection_subgroup(const ReflectionGroup& group, std::span<const int> orbit);

}  // namespace torus::weyl
