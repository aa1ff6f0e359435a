#include <gtest/gtest.h>

#include <set>

#include "torusclass/classify.hpp"
#include "torusclass/error.hpp"

using namespace torus;

namespace {

std::set<std::string> names(const char* text, ClassifyOptions opts = {}) {
  std::set<std::string> out;
  for (const auto& r : classify(parse_group_spec(text), opts).rows) out.insert(r.name);
  return out;
}

}  // namespace

TEST(BaseCatalog, Entries) {
  auto pt = base_catalog(0, 0);
  ASSERT_EQ(pt.size(), 1u);
  EXPECT_EQ(canonical_name(pt[0].expr), "pt");
  auto one = base_catalog(1, 1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0].base.to_string(), "S^2");
  EXPECT_EQ(one[1].base.to_string(), "S^2_1");
  EXPECT_EQ(one[2].base.to_string(), "S^2_2");
  EXPECT_EQ(base_catalog(1, 0).size(), 1u);
  EXPECT_EQ(base_catalog(2, 2).size(), 81u);
  EXPECT_THROW(base_catalog(3, 0), UnsupportedError);
}

TEST(EnumerateTuples, ClassCounts) {
  EXPECT_EQ(enumerate_tuples(parse_group_spec("SU(3)")).size(), 1u);
  EXPECT_EQ(enumerate_tuples(parse_group_spec("SO(3)xSO(3)")).size(), 2u);
  EXPECT_EQ(enumerate_tuples(parse_group_spec("SO(3)xT^1")).size(), 4u);
  EXPECT_EQ(enumerate_tuples(parse_group_spec("SU(2)xT^1")).size(), 4u);
}

TEST(EnumerateTuples, RepresentativesAreValidAndDistinct) {
  for (const char* s : {"SU(2)xSO(3)xT^1", "SO(3)xSO(3)xT^1", "SU(2)xT^2"}) {
    auto ts = enumerate_tuples(parse_group_spec(s));
    std::set<std::string> keys;
    for (const auto& t : ts) {
      EXPECT_TRUE(is_valid(t));
      keys.insert(canonical_key(t));
    }
    EXPECT_EQ(keys.size(), ts.size()) << s;
  }
}

TEST(EnumerateTuples, Errors) {
  EXPECT_THROW(enumerate_tuples(parse_group_spec("SO(4)xT^1")), UnsupportedError);
  EXPECT_THROW(enumerate_tuples(parse_group_spec("SU(2)xT^3")), UnsupportedError);
  EXPECT_THROW(enumerate_tuples(parse_group_spec("SU(2)xT^1"), ClassifyOptions{-1, false}), InputError);
}

TEST(Classify, SmallTables) {
  EXPECT_EQ(names("SU(2)xSU(2)"), (std::set<std::string>{"CP^1 x CP^1"}));
  EXPECT_EQ(names("SU(2)xSO(3)"), (std::set<std::string>{"CP^1 x S^2"}));
  EXPECT_EQ(names("SO(3)xT^1"),
            (std::set<std::string>{"S^2 x S^2", "S^2_1 x_{Z2} S^2_1", "S^2_1 x_{Z2} S^2_2", "S^4"}));
  EXPECT_EQ(names("SU(2)xT^1"), (std::set<std::string>{"S^2-bundle over CP^1", "CP^2", "S^4"}));
}

TEST(Classify, ElementaryFactors) {
  for (int l = 1; l <= 4; ++l) {
    std::string su = "SU(" + std::to_string(l + 1) + ")", so = "SO(" + std::to_string(2 * l + 1) + ")";
    EXPECT_EQ(names(su.c_str()), (std::set<std::string>{"CP^" + std::to_string(l)}));
    EXPECT_EQ(names(so.c_str()), (std::set<std::string>{"S^" + std::to_string(2 * l)}));
  }
}

TEST(Classify, DimensionAndOrbitSpace) {
  for (const char* s : {"SU(2)xSO(3)xT^1", "SU(3)xT^1", "SO(5)xT^2", "SO(3)xSO(3)xSO(3)"}) {
    GroupSpec g = normalize_spec(parse_group_spec(s));
    for (const auto& r : classify(g).rows) {
      EXPECT_EQ(r.dim, 2 * g.rank());
      EXPECT_EQ(r.orbit_space_dim, g.l0);
    }
  }
}

TEST(Classify, ReducedSoEven) {
  auto c = classify(parse_group_spec("SO(4)xT^1"), ClassifyOptions{kDefaultPsiBound, true});
  EXPECT_EQ(to_string(c.normalized), "SU(2)xT^2");
  for (const auto& r : c.rows) {
    EXPECT_EQ(r.orbit_space_dim, 2);
    EXPECT_FALSE(r.flags.quasitoric);
    EXPECT_FALSE(r.verified);
  }
}

TEST(Classify, VerifiedMarks) {
  for (const auto& r : classify(parse_group_spec("SO(3)xT^1")).rows) EXPECT_TRUE(r.verified);
  bool any_unverified = false;
  for (const auto& r : classify(parse_group_spec("SU(2)xSO(5)xT^1")).rows) any_unverified |= !r.verified;
  EXPECT_TRUE(any_unverified);
  EXPECT_NE(render(classify(parse_group_spec("SU(2)xSO(5)xT^1"))).find("[unverified]"), std::string::npos);
}

TEST(Classify, RenderIsDeterministic) {
  auto a = render(classify(parse_group_spec("SU(2)xSO(3)xT^1")));
  auto b = render(classify(parse_group_spec("SO(3)xSU(2)xT^1")));
  EXPECT_NE(a, b);  // header echoes the input
  EXPECT_EQ(a.substr(a.find('\n')), b.substr(b.find('\n')));
  EXPECT_EQ(a, render(classify(parse_group_spec("SU(2)xSO(3)xT^1"))));
}

TEST(FamilyAnswer, Examples) {
  auto f = family_answer(parse_group_spec("SO(4)xT^1"));
  EXPECT_EQ(canonical_name(f.family), "#_k(S^2 x S^4)");
  EXPECT_EQ(canonical_name(f.sphere), "S^6");
  EXPECT_EQ(f.chi, (Affine{2, 2}));
  EXPECT_EQ(euler(f.sphere).constant, 2);
  auto g = family_answer(parse_group_spec("SO(4)xSO(4)"));
  EXPECT_EQ(canonical_name(g.family), "#_k(S^4 x S^4)");
  EXPECT_EQ(canonical_name(g.sphere), "S^8");
  EXPECT_THROW(family_answer(parse_group_spec("SU(3)")), UnsupportedError);
}
