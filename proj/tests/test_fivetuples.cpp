#include <gtest/gtest.h>

#include <algorithm>

#include "torusclass/acceptance.hpp"
#include "torusclass/classify.hpp"
#include "torusclass/error.hpp"
#include "torusclass/fivetuples.hpp"

using namespace torus;

namespace {

constexpr Piece N = Piece::North, S = Piece::South, E = Piece::Equator;

Locus loc(std::initializer_list<std::vector<Piece>> comps) {
  std::vector<LocusComponent> cs;
  for (const auto& p : comps) cs.push_back({p});
  return Locus(cs);
}

GroupSpec spec(const char* text) { return normalize_spec(parse_group_spec(text)); }

bool has_clause(const std::vector<Violation>& v, const std::string& clause) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.clause == clause; });
}

bool contains_vertex(const Locus& l, const std::vector<Piece>& v) {
  for (const auto& c : l.components()) {
    bool in = true;
    for (std::size_t f = 0; f < v.size(); ++f) {
      if (c.pieces[f] != Piece::Whole && c.pieces[f] != v[f]) in = false;
    }
    if (in) return true;
  }
  return false;
}

// Torus-fixed points counted on the data: each pole vertex of the base
// contributes one point per SU fixed point (l+1 off A_i, 1 on it) and per
// SO(odd) sphere pole (2, halved when the Z2 of that slot acts).
std::int64_t fixed_point_count(const FiveTuple& t) {
  const int l0 = t.spec.l0;
  std::int64_t total = 0;
  for (unsigned code = 0; code < (1u << l0); ++code) {
    std::vector<Piece> v(l0);
    for (int f = 0; f < l0; ++f) v[f] = (code >> f) & 1 ? S : N;
    std::int64_t n = 1;
    for (int i = 0; i < t.k0(); ++i) n *= contains_vertex(t.A[i], v) ? 1 : t.spec.factors[i].ell() + 1;
    for (int s = 0; s < t.slots(); ++s) {
      bool twisted = t.base.slot_nontrivial(s);
      for (int j = s + 1; j < t.slots(); ++j) twisted = twisted || t.a[s][j];
      n *= twisted ? 1 : 2;
    }
    total += n;
  }
  return total;
}

std::vector<FiveTuple> tuples_of(const char* text) { return enumerate_tuples(parse_group_spec(text)); }

}  // namespace

TEST(Validate, PointTupleForSU3) {
  auto t = make_tuple(spec("SU(3)"), {{}}, CatalogBase{0, {}}, {Locus{}}, {});
  EXPECT_TRUE(validate(t).empty());
}

TEST(Validate, TwistOnNontrivialSlot) {
  CatalogBase base{0, {{}, {}}};
  auto ok = make_tuple(spec("SO(3)xSO(3)"), {}, base, {}, {Locus{}, Locus{}}, {{0, 1}, {0, 0}});
  EXPECT_TRUE(validate(ok).empty());
  CatalogBase twisted{1, {{Z2Tag::Trivial}, {Z2Tag::Antipodal}}};
  auto bad = make_tuple(spec("SO(3)xSO(3)xT^1"), {}, twisted, {}, {Locus{}, Locus{}}, {{0, 1}, {0, 0}});
  EXPECT_TRUE(has_clause(validate(bad), "5(a)(i)"));
}

TEST(Validate, NonPrimitiveWeight) {
  auto t = make_tuple(spec("SU(2)xT^1"), {{2}}, CatalogBase{1, {}}, {loc({{N}})}, {});
  EXPECT_TRUE(has_clause(validate(t), "3 kernel"));
  auto u = make_tuple(spec("SU(2)xT^1"), {{1}}, CatalogBase{1, {}}, {loc({{N}})}, {});
  EXPECT_TRUE(validate(u).empty());
}

TEST(Validate, OtherClauses) {
  // B nonempty over a trivial action
  auto b = make_tuple(spec("SO(3)xT^1"), {}, CatalogBase{1, {{Z2Tag::Trivial}}}, {}, {loc({{E}})});
  EXPECT_TRUE(has_clause(validate(b), "4 nontrivial"));
  // antipodal map fixes nothing
  auto c = make_tuple(spec("SO(3)xT^1"), {}, CatalogBase{1, {{Z2Tag::Antipodal}}}, {}, {loc({{E}})});
  EXPECT_TRUE(has_clause(validate(c), "4"));
  // orientation-reversing Z2 needs an even row sum
  auto d = make_tuple(spec("SO(3)xSO(3)xT^1"), {}, CatalogBase{1, {{Z2Tag::Antipodal}, {Z2Tag::Trivial}}}, {},
                      {Locus{}, Locus{}}, {{0, 1}, {0, 0}});
  EXPECT_TRUE(has_clause(validate(d), "5(b) parity"));
  // two SU factors sharing a fixed point
  auto e = make_tuple(spec("SU(2)xSU(2)xT^1"), {{1}, {1}}, CatalogBase{1, {}}, {loc({{N}}), loc({{N}})}, {});
  EXPECT_TRUE(has_clause(validate(e), "transversality A"));
  // wrong shape
  EXPECT_THROW(make_tuple(spec("SU(2)xT^1"), {}, CatalogBase{1, {}}, {}, {}), InputError);
}

TEST(Equivalent, Examples) {
  auto n = make_tuple(spec("SU(2)xT^1"), {{1}}, CatalogBase{1, {}}, {loc({{N}})}, {});
  auto s = make_tuple(spec("SU(2)xT^1"), {{-1}}, CatalogBase{1, {}}, {loc({{S}})}, {});
  auto ns = make_tuple(spec("SU(2)xT^1"), {{1}}, CatalogBase{1, {}}, {loc({{N}, {S}})}, {});
  EXPECT_TRUE(equivalent(n, s));
  EXPECT_TRUE(equivalent(n, n));
  EXPECT_FALSE(equivalent(n, ns));
  auto other = make_tuple(spec("SU(3)"), {{}}, CatalogBase{0, {}}, {Locus{}}, {});
  EXPECT_THROW(equivalent(n, other), InputError);
}

TEST(Equivalent, IsAnEquivalenceRelation) {
  auto ts = tuples_of("SO(3)xT^1");
  auto more = tuples_of("SU(2)xT^1");
  // include non-representative members: swap all poles
  for (auto t : more) {
    for (auto& a : t.A) a = a.swap_poles(1);
    for (auto& w : t.psi)
      for (auto& x : w) x = -x;
    ts.push_back(t);
  }
  ts.insert(ts.end(), more.begin(), more.end());
  for (const auto& x : ts) {
    for (const auto& y : ts) {
      if (!(x.spec == y.spec)) continue;
      EXPECT_EQ(equivalent(x, y), equivalent(y, x));
      for (const auto& z : ts) {
        if (!(x.spec == z.spec)) continue;
        if (equivalent(x, y) && equivalent(y, z)) EXPECT_TRUE(equivalent(x, z));
      }
    }
  }
}

TEST(Equivalent, WeightSignSymmetryOnSU2) {
  for (const auto& t : tuples_of("SU(2)xT^1")) {
    FiveTuple u = t;
    for (auto& w : u.psi)
      for (auto& x : w) x = -x;
    for (auto& a : u.A) a = a.swap_poles(1);
    EXPECT_TRUE(is_valid(u));
    EXPECT_TRUE(equivalent(t, u)) << serialize(t);
  }
}

TEST(Reduce, Examples) {
  auto so35 = make_tuple(spec("SO(3)xSO(5)"), {}, CatalogBase{0, {{}, {}}}, {}, {Locus{}, Locus{}});
  auto r = reduce(so35);
  EXPECT_EQ(r.active, 1);
  EXPECT_EQ(base_view(r).name, "S^4");
  ASSERT_EQ(base_view(r).slot_actions.size(), 1u);
  EXPECT_TRUE(base_view(r).slot_actions[0].is_trivial());

  auto so33 = make_tuple(spec("SO(3)xSO(3)"), {}, CatalogBase{0, {{}, {}}}, {}, {Locus{}, Locus{}}, {{0, 1}, {0, 0}});
  EXPECT_EQ(base_view(reduce(so33)).name, "S^2_1");

  auto su22 = make_tuple(spec("SU(2)xSU(2)"), {{}, {}}, CatalogBase{0, {}}, {Locus{}, Locus{}}, {});
  auto r2 = reduce(su22);
  EXPECT_EQ(base_view(r2).name, "CP^1");
  EXPECT_EQ(to_string(active_spec(r2)), "SU(2)");
  EXPECT_EQ(canonical_name(realize(r2)), "CP^1 x CP^1");
}

TEST(Reduce, ErrorsAndValidity) {
  auto t = make_tuple(spec("SU(3)"), {{}}, CatalogBase{0, {}}, {Locus{}}, {});
  auto r = reduce(t);
  EXPECT_THROW(reduce(r), InputError);
  EXPECT_THROW(expand(t), InputError);
  for (const char* s : {"SO(3)xSO(3)xT^1", "SU(2)xSO(3)xT^1", "SU(2)xSU(2)xT^1", "SO(3)xSO(3)xSO(3)"}) {
    for (const auto& x : tuples_of(s)) {
      FiveTuple cur = x;
      while (cur.active > 0) {
        cur = reduce(cur);
        EXPECT_TRUE(is_valid(cur)) << serialize(cur);
      }
    }
  }
}

TEST(Reduce, RoundTrip) {
  for (const char* s : {"SO(3)xSO(3)xT^1", "SU(2)xSO(3)xT^1", "SU(3)xSO(3)", "SU(2)xT^2"}) {
    for (const auto& x : tuples_of(s)) {
      auto r = reduce(x);
      EXPECT_TRUE(equivalent(expand(r), x));
      EXPECT_EQ(expand(r), x);
    }
  }
}

TEST(Realize, Examples) {
  auto su3 = make_tuple(spec("SU(3)"), {{}}, CatalogBase{0, {}}, {Locus{}}, {});
  EXPECT_EQ(canonical_name(realize(su3)), "CP^2");
  for (int l1 = 1; l1 <= 2; ++l1) {
    for (int l2 = 1; l2 <= 2; ++l2) {
      GroupSpec g{{GroupFactor::su(l1 + 1), GroupFactor::so(2 * l2 + 1)}, 1};
      auto t = make_tuple(g, {{1}}, CatalogBase{1, {{Z2Tag::Reflection}}}, {loc({{N}, {S}})}, {loc({{E}})});
      ASSERT_TRUE(is_valid(t)) << serialize(t);
      EXPECT_EQ(canonical_name(realize(t)), "S^" + std::to_string(2 * l1 + 2 * l2 + 2));
    }
  }
  auto s4 = make_tuple(spec("SO(3)xT^1"), {}, CatalogBase{1, {{Z2Tag::Reflection}}}, {}, {loc({{E}})});
  EXPECT_EQ(canonical_name(realize(s4)), "S^4");
  auto bad = make_tuple(spec("SU(2)xT^1"), {{2}}, CatalogBase{1, {}}, {loc({{N}})}, {});
  EXPECT_THROW(realize(bad), InputError);
}

TEST(Realize, InvariantsOverSmallSpecs) {
  for (const auto& s : acceptance::small_specs()) {
    GroupSpec g = normalize_spec(parse_group_spec(s));
    for (const auto& t : enumerate_tuples(g)) {
      auto m = realize(t);
      EXPECT_EQ(dim(m), 2 * g.rank()) << serialize(t);
      EXPECT_EQ(euler(m).constant, fixed_point_count(t)) << serialize(t);
      EXPECT_TRUE(orientable(m)) << serialize(t);
    }
  }
}

TEST(Flags, Examples) {
  auto su3 = make_tuple(spec("SU(3)"), {{}}, CatalogBase{0, {}}, {Locus{}}, {});
  EXPECT_TRUE(propagate_flags(su3).quasitoric);
  EXPECT_TRUE(propagate_flags(su3).cohomology_deg2);
  auto so33 = make_tuple(spec("SO(3)xSO(3)"), {}, CatalogBase{0, {{}, {}}}, {}, {Locus{}, Locus{}}, {{0, 1}, {0, 0}});
  EXPECT_FALSE(propagate_flags(so33).quasitoric);
  EXPECT_EQ(propagate_flags(so33).simply_connected, Tri::No);
  auto s4 = make_tuple(spec("SU(2)xT^1"), {{1}}, CatalogBase{1, {}}, {loc({{N}, {S}})}, {});
  EXPECT_FALSE(propagate_flags(s4).quasitoric);
  EXPECT_EQ(propagate_flags(s4).simply_connected, Tri::Yes);
}

TEST(Serialize, StableFieldOrder) {
  auto t = make_tuple(spec("SU(2)xT^1"), {{1}}, CatalogBase{1, {}}, {loc({{N}})}, {});
  auto f = fields(t);
  std::vector<std::string> names;
  for (const auto& [k, v] : f) names.push_back(k);
  EXPECT_EQ(names, (std::vector<std::string>{"spec", "psi", "base", "A", "B", "a"}));
  EXPECT_EQ(serialize(t), serialize(t));
  EXPECT_NE(serialize(t).find("A=[{N}]"), std::string::npos);
}
