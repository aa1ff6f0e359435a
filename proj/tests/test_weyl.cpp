#include <gtest/gtest.h>

#include <vector>

#include "torusclass/error.hpp"
#include "torusclass/weyl.hpp"

using namespace torus;
using namespace torus::weyl;

namespace {

// Signed permutation matrix: column i holds signs[i] in row perm[i].
std::vector<std::vector<int>> matrix(const SignedPermutation& g) {
  std::vector<std::vector<int>> m(g.degree(), std::vector<int>(g.degree(), 0));
  for (int i = 0; i < g.degree(); ++i) m[g.perm()[i]][i] = g.signs()[i];
  return m;
}

std::vector<std::vector<int>> mul(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<ReflectionGroup> small_groups() {
  std::vector<ReflectionGroup> out;
  for (int l = 1; l <= 4; ++l) {
    out.push_back(weyl_group_of(GroupFactor::su(l + 1)));
    out.push_back(weyl_group_of(GroupFactor::so(2 * l + 1)));
    if (l >= 2) out.push_back(weyl_group_of(GroupFactor::so(2 * l)));
  }
  return out;
}

}  // namespace

TEST(SignedPermutation, RejectsNonBijection) {
  EXPECT_THROW(SignedPermutation({0, 0}, {1, 1}), InputError);
  EXPECT_THROW(SignedPermutation({0, 1}, {1, 2}), InputError);
}

TEST(Compose, IdentityAndInvolution) {
  auto id = SignedPermutation::identity(3);
  EXPECT_EQ(compose(id, id), id);
  auto f = SignedPermutation::swap(3, 0, 1, true);
  EXPECT_EQ(compose(f, f), id);
}

TEST(Compose, MatchesMatrixProduct) {
  auto a = SignedPermutation::swap(3, 0, 1, false);
  auto b = SignedPermutation::flip(3, 0);
  auto c = compose(a, b);
  EXPECT_EQ(c.perm(), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(matrix(c), mul(matrix(a), matrix(b)));
}

TEST(Compose, Associative) {
  auto g = weyl_group_of(GroupFactor::so(5));
  for (const auto& x : g.elements)
    for (const auto& y : g.elements)
      for (const auto& z : g.elements) EXPECT_EQ(compose(compose(x, y), z), compose(x, compose(y, z)));
}

TEST(EnumerateGroup, SmallClosures) {
  std::vector<SignedPermutation> one = {SignedPermutation::swap(2, 0, 1, true)};
  EXPECT_EQ(enumerate_group(one, 2).order(), 2u);
  std::vector<SignedPermutation> b2 = {SignedPermutation::swap(2, 0, 1, true), SignedPermutation::swap(2, 0, 1, false),
                                       SignedPermutation::flip(2, 0)};
  EXPECT_EQ(enumerate_group(b2, 2).order(), 8u);
  std::vector<SignedPermutation> s3 = {SignedPermutation::swap(3, 0, 1, true), SignedPermutation::swap(3, 0, 2, true)};
  EXPECT_EQ(enumerate_group(s3, 3).order(), 6u);
}

TEST(EnumerateGroup, CapAndDegreeErrors) {
  auto g = weyl_group_of(GroupFactor::so(9));
  std::vector<SignedPermutation> gens = g.generators;
  EXPECT_THROW(enumerate_group(gens, 4, 10), CapExceededError);
  std::vector<SignedPermutation> mixed = {SignedPermutation::flip(2, 0), SignedPermutation::flip(3, 0)};
  EXPECT_THROW(enumerate_group(mixed, 2), InputError);
}

TEST(EnumerateGroup, ClosedUnderCompositionAndInverse) {
  for (const auto& g : small_groups()) {
    if (g.order() > 400) continue;
    std::set<SignedPermutation> elems(g.elements.begin(), g.elements.end());
    EXPECT_TRUE(elems.count(SignedPermutation::identity(g.degree)));
    for (const auto& x : g.elements) {
      EXPECT_TRUE(elems.count(x.inverse()));
      for (const auto& y : g.elements) ASSERT_TRUE(elems.count(compose(x, y)));
    }
  }
}

TEST(ClassifyReflection, Types) {
  EXPECT_EQ(classify_reflection(SignedPermutation::identity(3)), ReflectionType::NotReflection);
  EXPECT_EQ(classify_reflection(SignedPermutation::swap(3, 0, 1, true)), ReflectionType::Type1);
  EXPECT_EQ(classify_reflection(SignedPermutation::swap(3, 0, 1, false)), ReflectionType::Type2);
  EXPECT_EQ(classify_reflection(SignedPermutation::flip(3, 0)), ReflectionType::Type3);
}

TEST(ClassifyReflection, TraceCriterionOnInvolutions) {
  for (const auto& g : small_groups()) {
    for (const auto& x : g.elements) {
      if (x.order() != 2) continue;
      bool refl = classify_reflection(x) != ReflectionType::NotReflection;
      EXPECT_EQ(refl, x.signed_trace() == g.degree - 2) << x.to_string();
    }
  }
}

TEST(Reflections, Counts) {
  EXPECT_EQ(reflections(weyl_group_of(GroupFactor::su(3))).size(), 3u);
  EXPECT_EQ(reflections(weyl_group_of(GroupFactor::so(5))).size(), 4u);
  std::vector<SignedPermutation> none;
  EXPECT_TRUE(reflections(enumerate_group(none, 3)).empty());
}

TEST(OrbitPartition, Examples) {
  std::vector<SignedPermutation> none;
  auto trivial = orbit_partition(enumerate_group(none, 3));
  EXPECT_EQ(trivial.fixed_preserved, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(trivial.orbits.empty());

  std::vector<SignedPermutation> g1 = {SignedPermutation::flip(2, 0)};
  auto p = orbit_partition(enumerate_group(g1, 2));
  EXPECT_EQ(p.fixed_preserved, (std::vector<int>{1}));
  EXPECT_EQ(p.orbits, (std::vector<std::vector<int>>{{0}}));

  std::vector<int> idx = {0, 1, 2};
  auto su3 = orbit_partition(weyl_group_of(GroupFactor::su(3), 4, idx));
  EXPECT_EQ(su3.fixed_preserved, (std::vector<int>{3}));
  EXPECT_EQ(su3.orbits, (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(ReflectionCountBetween, Examples) {
  EXPECT_EQ(reflection_count_between(weyl_group_of(GroupFactor::su(3)), 0, 1), 1);
  EXPECT_EQ(reflection_count_between(weyl_group_of(GroupFactor::so(4)), 0, 1), 2);
  EXPECT_EQ(reflection_count_between(weyl_group_of(GroupFactor::so(5)), 0, 1), 2);
  EXPECT_THROW(reflection_count_between(weyl_group_of(GroupFactor::so(5)), 0, 0), InputError);
}

TEST(ReflectionCountBetween, IndependentOfPair) {
  for (const auto& g : small_groups()) {
    for (const auto& orbit : orbit_partition(g).orbits) {
      if (orbit.size() < 2) continue;
      int first = reflection_count_between(g, orbit[0], orbit[1]);
      for (int a : orbit)
        for (int b : orbit)
          if (a != b) EXPECT_EQ(reflection_count_between(g, a, b), first);
    }
  }
}

TEST(OrbitReflectionSubgroup, TransitiveOnItsOrbit) {
  for (const auto& g : small_groups()) {
    for (const auto& orbit : orbit_partition(g).orbits) {
      auto h = orbit_reflection_subgroup(g, orbit);
      std::set<int> reached;
      for (const auto& x : h.elements) reached.insert(x.perm()[orbit[0]]);
      EXPECT_EQ(reached, std::set<int>(orbit.begin(), orbit.end()));
    }
  }
}

TEST(DetectFactorType, Examples) {
  std::vector<int> all4 = {0, 1, 2, 3}, all2 = {0, 1};
  EXPECT_EQ(detect_factor_type(weyl_group_of(GroupFactor::su(4)), all4), (ElementaryType{GroupFactor::su(4), 4}));
  std::vector<SignedPermutation> b2 = {SignedPermutation::swap(2, 0, 1, true), SignedPermutation::swap(2, 0, 1, false),
                                       SignedPermutation::flip(2, 0), SignedPermutation::flip(2, 1)};
  EXPECT_EQ(detect_factor_type(enumerate_group(b2, 2), all2), (ElementaryType{GroupFactor::so(5), 2}));
  std::vector<SignedPermutation> d2 = {SignedPermutation::swap(2, 0, 1, true), SignedPermutation::swap(2, 0, 1, false)};
  EXPECT_EQ(detect_factor_type(enumerate_group(d2, 2), all2), (ElementaryType{GroupFactor::so(4), 2}));
}

TEST(WeylGroupOf, Orders) {
  auto su2 = weyl_group_of(GroupFactor::su(2));
  EXPECT_EQ(su2.order(), 2u);
  EXPECT_EQ(weyl_group_of(GroupFactor::so(7)).order(), 48u);
  EXPECT_EQ(weyl_group_of(GroupFactor::so(8)).order(), 192u);
  for (int l = 1; l <= 5; ++l) {
    EXPECT_EQ(weyl_group_of(GroupFactor::su(l + 1)).order(), static_cast<std::size_t>(factorial(l + 1)));
    EXPECT_EQ(weyl_group_of(GroupFactor::so(2 * l + 1)).order(), static_cast<std::size_t>((1L << l) * factorial(l)));
  }
}

TEST(WeylGroupOf, EmbeddedLetters) {
  std::vector<int> idx = {1, 3};
  auto g = weyl_group_of(GroupFactor::so(5), 4, idx);
  EXPECT_EQ(g.order(), 8u);
  auto p = orbit_partition(g);
  EXPECT_EQ(p.fixed_preserved, (std::vector<int>{0, 2}));
  std::vector<int> wrong = {0, 1, 2};
  EXPECT_THROW(weyl_group_of(GroupFactor::so(5), 4, wrong), InputError);
}
