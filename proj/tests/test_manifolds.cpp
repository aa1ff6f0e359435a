#include <gtest/gtest.h>

#include <random>

#include "torusclass/error.hpp"
#include "torusclass/manifolds.hpp"

using namespace torus;
using M = ManifoldExpr;

namespace {

node::Center complex_center(int dim, std::int64_t chi, int l) {
  return {Locus{}, dim, chi, node::BlowKind::Complex, l};
}

// Random product trees of spheres and projective spaces.
M random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1), small(1, 3);
  switch (kind(rng)) {
    case 0: return M::sphere(2 * small(rng));
    case 1: return M::cp(small(rng));
    case 2: return M::product({random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    default: {
      auto s = random_tree(rng, depth - 1);
      return M::conn_sum(M::product({s, M::sphere(2)}), small(rng));
    }
  }
}

// Fixed points of the standard torus actions: 2 per sphere, l+1 per CP^l.
std::int64_t fixed_points(const M& e) {
  if (auto s = e.as<node::EvenSphere>()) return s->dim == 0 ? 1 : 2;
  if (auto c = e.as<node::ComplexProjective>()) return c->l + 1;
  if (auto p = e.as<node::Product>()) {
    std::int64_t n = 1;
    for (const auto& c : p->children) n *= fixed_points(c);
    return n;
  }
  if (auto c = e.as<node::ConnSumFamily>()) return 2 + *c->k * (fixed_points(*c->summand) - 2);
  return -1;
}

}  // namespace

TEST(Dim, Examples) {
  EXPECT_EQ(dim(M::point()), 0);
  EXPECT_EQ(dim(M::product({M::cp(2), M::sphere(4)})), 8);
  EXPECT_EQ(dim(M::z2_quotient(2, M::sphere(2), Z2ActionTag::antipodal())), 4);
}

TEST(Euler, Examples) {
  auto fam = M::conn_sum(M::product({M::sphere(2), M::sphere(4)}), std::nullopt);
  EXPECT_EQ(euler(fam), (Affine{2, 2}));
  EXPECT_EQ(euler(fam).to_string(), "2k+2");
  EXPECT_EQ(euler(M::product({M::cp(1), M::cp(2)})).constant, 6);
  EXPECT_EQ(euler(M::conn_sum(M::product({M::sphere(2), M::sphere(4)}), 0)).constant, 2);
}

TEST(Euler, BlowDownToSixSphere) {
  auto bundle = M::proj_bundle_su(2, M::sphere(2), {1});
  auto s6 = M::blow_down(bundle, complex_center(0, 2, 2));
  EXPECT_EQ(euler(s6).constant, 2);
  EXPECT_EQ(dim(s6), 6);
  EXPECT_EQ(canonical_name(s6), "S^6");
}

TEST(Euler, ProductsMultiplyAndTreesMatchFixedPoints) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto e = random_tree(rng, 3);
    EXPECT_EQ(euler(e).constant, fixed_points(e)) << structural_name(e);
    EXPECT_EQ(dim(e) % 2, 0);
  }
}

TEST(Orientable, Examples) {
  EXPECT_TRUE(orientable(M::sphere(4)));
  EXPECT_TRUE(orientable(M::z2_quotient(2, M::sphere(2), Z2ActionTag::antipodal())));
  EXPECT_THROW(M::z2_quotient(2, M::sphere(2), Z2ActionTag::trivial()), InputError);
}

TEST(SimplyConnected, Examples) {
  EXPECT_EQ(simply_connected(M::sphere(4)), Tri::Yes);
  EXPECT_EQ(simply_connected(M::z2_quotient(2, M::sphere(2), Z2ActionTag::antipodal())), Tri::No);
  auto bundle = M::proj_bundle_su(1, M::sphere(2), {1});
  EXPECT_EQ(simply_connected(M::blow_down(bundle, complex_center(0, 1, 1))), Tri::Yes);
}

TEST(CanonicalName, Identifications) {
  for (int l = 1; l <= 3; ++l) {
    auto bundle = M::proj_bundle_su(l, M::sphere(2), {1});
    EXPECT_EQ(canonical_name(M::blow_down(bundle, complex_center(0, 1, l))), "CP^" + std::to_string(l + 1));
    EXPECT_EQ(canonical_name(M::blow_down(bundle, complex_center(0, 2, l))), "S^" + std::to_string(2 * l + 2));
  }
  EXPECT_EQ(canonical_name(M::product({M::cp(1), M::cp(1)})), "CP^1 x CP^1");
}

TEST(CanonicalName, SortedFlatProducts) {
  auto e = M::product({M::sphere(4), M::product({M::cp(2), M::sphere(2)})});
  EXPECT_EQ(canonical_name(e), "CP^2 x S^2 x S^4");
}

TEST(CanonicalName, Quotients) {
  auto q1 = M::z2_quotient(2, M::sphere(2), Z2ActionTag::antipodal());
  auto q2 = M::z2_quotient(2, M::sphere(2), Z2ActionTag::reflection());
  EXPECT_EQ(canonical_name(q1), "S^2_1 x_{Z2} S^2_1");
  EXPECT_EQ(canonical_name(q2), "S^2_1 x_{Z2} S^2_2");
  EXPECT_TRUE(reverses_orientation(M::sphere(2), Z2ActionTag::reflection()));
}

TEST(CanonicalName, SymbolicFamilies) {
  auto fam = M::conn_sum(M::product({M::sphere(2), M::sphere(4)}), std::nullopt);
  EXPECT_EQ(canonical_name(fam), "#_k(S^2 x S^4)");
  EXPECT_EQ(canonical_name(M::conn_sum(M::product({M::sphere(2), M::sphere(4)}), 3)), "#_3(S^2 x S^4)");
  EXPECT_EQ(canonical_name(M::proj_bundle_su(1, M::sphere(2), {0})), "S^2-bundle over CP^1");
}

TEST(BlowDown, RejectsMismatchedCenter) {
  auto bundle = M::proj_bundle_su(2, M::sphere(2), {1});
  EXPECT_THROW(M::blow_down(bundle, complex_center(0, 2, 1)), InputError);
  EXPECT_THROW(M::blow_down(M::sphere(4), complex_center(0, 2, 1)), InputError);
}
