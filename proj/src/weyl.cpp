#include "torusclass/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "torusclass/error.hpp"

namespace torus::weyl {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw InputError("signed permutation: perm and signs differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    if (p < 0 || p >= degree() || seen[p]) {
      throw InputError("signed permutation: perm is not a bijection");
    }
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InputError("signed permutation: signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(int degree) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<int>(degree, 1)};
}

SignedPermutation SignedPermutation::swap(int degree, int i, int j, bool positive) {
  if (i == j || i < 0 || j < 0 || i >= degree || j >= degree) {
    throw InputError("swap: letters must be distinct and in range");
  }
  auto g = identity(degree);
  std::swap(g.perm_[i], g.perm_[j]);
  if (!positive) g.signs_[i] = g.signs_[j] = -1;
  return g;
}

SignedPermutation SignedPermutation::flip(int degree, int i) {
  if (i < 0 || i >= degree) throw InputError("flip: letter out of range");
  auto g = identity(degree);
  g.signs_[i] = -1;
  return g;
}

int SignedPermutation::signed_trace() const {
  int t = 0;
  for (int i = 0; i < degree(); ++i) {
    if (perm_[i] == i) t += signs_[i];
  }
  return t;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

int SignedPermutation::order() const {
  // lcm of cycle lengths, doubled for cycles whose sign product is -1
  std::vector<bool> seen(perm_.size(), false);
  long result = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    int sign = 1;
    for (int j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      sign *= signs_[j];
      ++len;
    }
    long cyc = sign < 0 ? 2L * len : len;
    result = std::lcm(result, cyc);
  }
  return static_cast<int>(result);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<int> signs(perm_.size());
  for (int i = 0; i < degree(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return {std::move(perm), std::move(signs)};
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ' ';
    os << (signs_[i] < 0 ? "-" : "+") << perm_[i] + 1;
  }
  os << ']';
  return os.str();
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.degree() != b.degree()) {
    throw InputError("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()) + ")");
  }
  const int m = a.degree();
  std::vector<int> perm(m);
  std::vector<int> signs(m);
  for (int i = 0; i < m; ++i) {
    int bi = b.perm()[i];
    perm[i] = a.perm()[bi];
    signs[i] = b.signs()[i] * a.signs()[bi];
  }
  return {std::move(perm), std::move(signs)};
}

ReflectionGroup enumerate_group(std::span<const SignedPermutation> generators, int degree,
                                std::size_t size_cap) {
  if (size_cap < 1) throw InputError("enumerate_group: size_cap must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("enumerate_group: generators differ in degree");
  }
  ReflectionGroup group;
  group.degree = degree;
  group.size_cap = size_cap;
  group.generators.assign(generators.begin(), generators.end());

  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> frontier;
  auto id = SignedPermutation::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  // Finite group: closing under left multiplication by generators suffices.
  while (!frontier.empty()) {
    SignedPermutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      auto y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > size_cap) {
          throw CapExceededError("group enumeration exceeded size cap " +
                                 std::to_string(size_cap));
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  group.elements.assign(seen.begin(), seen.end());
  return group;
}

const char* to_string(ReflectionType t) {
  switch (t) {
    case ReflectionType::Type1: return "Type1";
    case ReflectionType::Type2: return "Type2";
    case ReflectionType::Type3: return "Type3";
    case ReflectionType::NotReflection: return "NotReflection";
  }
  return "?";
}

ReflectionType classify_reflection(const SignedPermutation& g) {
  const int m = g.degree();
  if (g.signed_trace() != m - 2 || g.order() != 2) return ReflectionType::NotReflection;
  std::vector<int> moved;
  for (int i = 0; i < m; ++i) {
    if (g.perm()[i] != i) moved.push_back(i);
  }
  if (moved.empty()) return ReflectionType::Type3;
  // order 2 with trace m-2 and a moved letter: one transposition, equal signs
  return g.signs()[moved[0]] > 0 ? ReflectionType::Type1 : ReflectionType::Type2;
}

std::vector<SignedPermutation> reflections(const ReflectionGroup& group) {
  std::vector<SignedPermutation> out;
  for (const auto& g : group.elements) {
    if (classify_reflection(g) != ReflectionType::NotReflection) out.push_back(g);
  }
  return out;
}

OrbitPartition orbit_partition(const ReflectionGroup& group) {
  const int m = group.degree;
  // union-find over letters joined by permutation images
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> reversed(m, false);
  for (const auto& g : group.elements) {
    for (int i = 0; i < m; ++i) {
      int j = g.perm()[i];
      if (j == i && g.signs()[i] < 0) reversed[i] = true;
      int a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  std::vector<std::vector<int>> classes(m);
  for (int i = 0; i < m; ++i) classes[find(i)].push_back(i);
  for (int r = 0; r < m; ++r) {
    const auto& cls = classes[r];
    if (cls.empty()) continue;
    if (cls.size() == 1 && !reversed[cls[0]]) {
      out.fixed_preserved.push_back(cls[0]);
    } else {
      out.orbits.push_back(cls);
    }
  }
  return out;
}

namespace {

bool same_orbit(const ReflectionGroup& group, int j1, int j2) {
  for (const auto& g : group.elements) {
    if (g.perm()[j1] == j2) return true;
  }
  return false;
}

}  // namespace

int reflection_count_between(const ReflectionGroup& group, int j1, int j2) {
  if (j1 == j2) throw InputError("reflection_count_between: letters must differ");
  if (j1 < 0 || j2 < 0 || j1 >= group.degree || j2 >= group.degree) {
    throw InputError("reflection_count_between: letter out of range");
  }
  if (!same_orbit(group, j1, j2)) {
    throw InputError("reflection_count_between: letters lie in different orbits");
  }
  int count = 0;
  for (const auto& g : group.elements) {
    if (g.perm()[j1] == j2 && classify_reflection(g) != ReflectionType::NotReflection) ++count;
  }
  return count;
}

ElementaryType detect_factor_type(const ReflectionGroup& group, std::span<const int> orbit) {
  if (orbit.empty()) throw InputError("detect_factor_type: empty orbit");
  const int size = static_cast<int>(orbit.size());
  if (size == 1) {
    int j = orbit[0];
    bool reversed = std::any_of(group.elements.begin(), group.elements.end(),
                                [&](const SignedPermutation& g) { return g.signs()[j] < 0; });
    if (!reversed) throw InputError("detect_factor_type: letter is in the fixed set");
    // SU(2) = Spin(3) acting with #F = 1 factors through SO(3)
    return {GroupFactor::so(3), 1};
  }
  std::optional<int> count;
  for (int a : orbit) {
    for (int b : orbit) {
      if (a == b) continue;
      int c = reflection_count_between(group, a, b);
      if (count && *count != c) {
        throw InputError("detect_factor_type: reflection counts vary within the orbit");
      }
      count = c;
    }
  }
  // SU(l+1) permutes l+1 letters
  if (*count == 1) return {GroupFactor::su(size), size};
  if (*count != 2) {
    throw InputError("detect_factor_type: " + std::to_string(*count) +
                     " reflections between two letters; a Weyl group action has 1 or 2");
  }
  bool has_type3 = false;
  for (const auto& g : reflections(group)) {
    if (classify_reflection(g) != ReflectionType::Type3) continue;
    for (int j : orbit) {
      if (g.signs()[j] < 0) has_type3 = true;
    }
  }
  if (has_type3) return {GroupFactor::so(2 * size + 1), size};
  return {GroupFactor::so(2 * size), size};
}

ReflectionGroup weyl_group_of(const GroupFactor& factor, int degree, std::span<const int> indices,
                              std::size_t size_cap) {
  std::set<int> distinct(indices.begin(), indices.end());
  if (distinct.size() != indices.size()) throw InputError("weyl_group_of: index overlap");
  for (int i : indices) {
    if (i < 0 || i >= degree) throw InputError("weyl_group_of: index outside the degree");
  }
  const int letters = static_cast<int>(indices.size());
  std::vector<SignedPermutation> gens;
  auto add_swaps = [&](bool with_negative) {
    for (int a = 0; a < letters; ++a) {
      for (int b = a + 1; b < letters; ++b) {
        gens.push_back(SignedPermutation::swap(degree, indices[a], indices[b], true));
        if (with_negative) {
          gens.push_back(SignedPermutation::swap(degree, indices[a], indices[b], false));
        }
      }
    }
  };
  switch (factor.kind) {
    case FactorKind::SU:
      if (factor.n < 2) throw InputError("weyl_group_of: SU(n) needs n >= 2");
      if (letters != factor.n) {
        throw InputError("weyl_group_of: " + to_string(factor) + " acts on " +
                         std::to_string(factor.n) + " letters");
      }
      add_swaps(false);
      break;
    case FactorKind::SO:
    case FactorKind::Spin:
    case FactorKind::Sp: {
      const bool type_b = factor.kind == FactorKind::Sp || factor.n % 2 == 1;
      const int l = factor.kind == FactorKind::Sp ? factor.n : factor.n / 2;
      if (l < 1 || (!type_b && l < 2)) {
        throw InputError("weyl_group_of: " + to_string(factor) + " is not semisimple");
      }
      if (letters != l) {
        throw InputError("weyl_group_of: " + to_string(factor) + " acts on " +
                         std::to_string(l) + " letters");
      }
      add_swaps(true);
      if (type_b) gens.push_back(SignedPermutation::flip(degree, indices[0]));
      break;
    }
    case FactorKind::Torus:
      throw InputError("weyl_group_of: a torus has trivial Weyl group and no letters");
  }
  return enumerate_group(gens, degree, size_cap);
}

ReflectionGroup weyl_group_of(const GroupFactor& factor) {
  int letters = 0;
  switch (factor.kind) {
    case FactorKind::SU: letters = factor.n; break;
    case FactorKind::Sp: letters = factor.n; break;
    case FactorKind::SO:
    case FactorKind::Spin: letters = factor.n / 2; break;
    case FactorKind::Torus: letters = 0; break;
  }
  std::vector<int> idx(std::max(letters, 0));
  std::iota(idx.begin(), idx.end(), 0);
  return weyl_group_of(factor, letters, idx);
}

ReflectionGroup orbit_reflection_subgroup(const ReflectionGroup& group,
                                          std::span<const int> orbit) {
  std::set<int> in_orbit(orbit.begin(), orbit.end());
  std::vector<SignedPermutation> gens;
  for (const auto& r : reflections(group)) {
    bool inside = true;
    for (int i = 0; i < group.degree; ++i) {
      bool moves = r.perm()[i] != i || r.signs()[i] < 0;
      if (moves && !in_orbit.count(i)) inside = false;
    }
    if (inside) gens.push_back(r);
  }
  return enumerate_group(gens, group.degree, group.size_cap);
}

}  // namespace torus::weyl
