#include "torusclass/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "torusclass/classify.hpp"
#include "torusclass/error.hpp"
#include "torusclass/manifolds.hpp"
#include "torusclass/tables.hpp"
#include "torusclass/weyl.hpp"

namespace torus::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Collects mismatches; a criterion passes when none were recorded.
struct Report {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() >= 5) failures.back() = what + " (and more)";
  }
  bool ok() const { return failures.empty(); }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream os;
    if (ok()) {
      os << checks << " checks" << (extra.empty() ? "" : ", " + extra);
    } else {
      os << failures.size() << " failing of " << checks << ": ";
      for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
    }
    return os.str();
  }
};

std::vector<GroupFactor> classical(int max_rank, bool include_d1) {
  std::vector<GroupFactor> out;
  for (int l = 1; l <= max_rank; ++l) {
    out.push_back(GroupFactor::su(l + 1));
    out.push_back(GroupFactor::so(2 * l + 1));
    if (l >= 2 || include_d1) out.push_back(GroupFactor::so(2 * l));
  }
  return out;
}

// ---- criteria -----------------------------------------------------------------

CriterionResult weyl_orders() {
  Report r;
  auto start = Clock::now();
  for (int l = 1; l <= 5; ++l) {
    r.expect(weyl::weyl_group_of(GroupFactor::su(l + 1)).order() == static_cast<std::size_t>(factorial(l + 1)),
             "|W(A" + std::to_string(l) + ")|");
    r.expect(weyl::weyl_group_of(GroupFactor::so(2 * l + 1)).order() ==
                 static_cast<std::size_t>((1L << l) * factorial(l)),
             "|W(B" + std::to_string(l) + ")|");
    if (l >= 2) {
      r.expect(weyl::weyl_group_of(GroupFactor::so(2 * l)).order() ==
                   static_cast<std::size_t>((1L << (l - 1)) * factorial(l)),
               "|W(D" + std::to_string(l) + ")|");
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  r.expect(secs < 1.0, "enumeration took longer than 1 s");
  return {1, "Weyl group orders", r.ok(), r.summary("A_l, B_l for l <= 5, D_l for 2 <= l <= 5"), 0};
}

CriterionResult reflection_fingerprints() {
  Report r;
  for (int l = 1; l <= 5; ++l) {
    struct Row {
      GroupFactor f;
      std::size_t count;
      bool type3;
      const char* tag;
    };
    std::vector<Row> rows = {{GroupFactor::su(l + 1), static_cast<std::size_t>(l * (l + 1) / 2), false, "A"},
                             {GroupFactor::so(2 * l + 1), static_cast<std::size_t>(l * l), true, "B"}};
    if (l >= 2) rows.push_back({GroupFactor::so(2 * l), static_cast<std::size_t>(l * (l - 1)), false, "D"});
    for (const auto& row : rows) {
      auto refl = weyl::reflections(weyl::weyl_group_of(row.f));
      bool has3 = std::any_of(refl.begin(), refl.end(), [](const weyl::SignedPermutation& g) {
        return weyl::classify_reflection(g) == weyl::ReflectionType::Type3;
      });
      std::string name = std::string(row.tag) + std::to_string(l);
      r.expect(refl.size() == row.count, "reflection count of " + name);
      r.expect(has3 == row.type3, "Type3 presence in " + name);
    }
  }
  return {2, "Reflection fingerprints", r.ok(), r.summary(), 0};
}

CriterionResult detection_round_trip() {
  Report r;
  for (const auto& f : classical(4, false)) {
    auto g = weyl::weyl_group_of(f);
    auto part = weyl::orbit_partition(g);
    if (part.orbits.size() != 1) {
      r.expect(false, to_string(f) + " does not act with a single orbit");
      continue;
    }
    auto t = weyl::detect_factor_type(g, part.orbits[0]);
    r.expect(t.factor == f, to_string(f) + " detected as " + to_string(t.factor));
    r.expect(possible_F_sizes(f).count(t.f_count) == 1, to_string(f) + " #F = " + std::to_string(t.f_count));
  }
  return {3, "Detection round-trip", r.ok(), r.summary("all classical factors of rank <= 4"), 0};
}

CriterionResult static_tables() {
  Report r;
  using F = GroupFactor;
  const std::vector<std::pair<F, std::set<int>>> f_sizes = {
      {F::su(2), {1, 2}}, {F::spin(3), {1, 2}}, {F::sp(1), {1, 2}}, {F::spin(4), {2}},   {F::spin(5), {2}},
      {F::sp(2), {2}},    {F::su(4), {3, 4}},   {F::spin(6), {3, 4}}, {F::su(3), {3}},   {F::su(5), {5}},
      {F::su(6), {6}},    {F::spin(7), {3}},    {F::spin(9), {4}},    {F::spin(8), {4}}, {F::spin(10), {5}},
      {F::sp(3), {3}},    {F::sp(4), {4}},
  };
  for (const auto& [f, want] : f_sizes) r.expect(possible_F_sizes(f) == want, "#F of " + to_string(f));

  const std::vector<std::pair<F, RepDims>> reps = {
      {F::su(2), {3, 2}},   {F::spin(4), {3, 2}}, {F::spin(5), {5, 4}},   {F::su(4), {6, 4}},
      {F::su(3), {6, 3}},   {F::su(5), {10, 5}},  {F::su(6), {12, 6}},    {F::spin(7), {7, 7}},
      {F::spin(9), {9, 9}}, {F::spin(8), {8, 8}}, {F::spin(10), {10, 10}}, {F::sp(3), {7, 6}},
      {F::sp(4), {9, 8}},
  };
  for (const auto& [f, want] : reps) r.expect(min_rep_dims(f) == want, "rep dims of " + to_string(f));

  const std::vector<std::pair<F, MaxRankSubgroup>> subs = {
      {F::su(2), {"S(U(1)xU(1))", 2}},          {F::spin(5), {"Spin(4)", 4}},
      {F::su(4), {"S(U(3)xU(1))", 6}},          {F::su(3), {"S(U(2)xU(1))", 4}},
      {F::su(5), {"S(U(4)xU(1))", 8}},          {F::spin(7), {"Spin(6)", 6}},
      {F::spin(9), {"Spin(8)", 8}},             {F::spin(8), {"Spin(6)xSpin(2)", 12}},
      {F::spin(10), {"Spin(8)xSpin(2)", 16}},   {F::sp(3), {"Sp(2)xSp(1)", 8}},
      {F::sp(4), {"Sp(3)xSp(1)", 12}},
  };
  for (const auto& [f, want] : subs) r.expect(max_rank_subgroup(f) == want, "max-rank subgroup of " + to_string(f));
  bool spin4_rejected = false;
  try {
    max_rank_subgroup(F::spin(4));
  } catch (const InputError&) {
    spin4_rejected = true;
  }
  r.expect(spin4_rejected, "Spin(4) has no single max-rank subgroup row");
  return {4, "Static tables", r.ok(), r.summary(), 0};
}

std::set<std::string> names_of(const Classification& c) {
  std::set<std::string> out;
  for (const auto& row : c.rows) out.insert(row.name);
  return out;
}

CriterionResult classification_tables() {
  Report r;
  const std::vector<std::pair<std::string, std::set<std::string>>> expected = {
      {"SU(3)", {"CP^2"}},
      {"SU(2)xSU(2)", {"CP^1 x CP^1"}},
      {"SU(2)xT^1", {"S^2-bundle over CP^1", "CP^2", "S^4"}},
      {"SU(2)xSO(3)", {"CP^1 x S^2"}},
      {"SO(3)xSO(3)", {"S^2_1 x_{Z2} S^2_1", "S^2 x S^2"}},
      {"SO(3)xT^1", {"S^2 x S^2", "S^2_1 x_{Z2} S^2_1", "S^2_1 x_{Z2} S^2_2", "S^4"}},
  };
  const std::map<std::string, std::size_t> class_counts = {{"SO(3)xSO(3)", 2}, {"SO(3)xT^1", 4}, {"SU(3)", 1}};
  double slowest = 0;
  for (const auto& [spec, names] : expected) {
    auto start = Clock::now();
    Classification c = classify(parse_group_spec(spec));
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - start).count());
    r.expect(names_of(c) == names, spec + " name set");
    if (auto it = class_counts.find(spec); it != class_counts.end()) {
      r.expect(c.rows.size() == it->second, spec + " class count");
    }
  }
  const std::vector<std::pair<std::string, std::vector<std::string>>> codim_one = {
      {"T^1", {"S^2"}},         {"SU(2)xT^1", {"CP^2", "S^4"}},  {"SO(3)xT^1", {"S^4"}},
      {"SU(2)xSU(2)xT^1", {"CP^3"}}, {"SU(2)xSO(3)xT^1", {"S^6"}},
  };
  std::size_t rows = 0;
  for (const auto& [spec, names] : codim_one) {
    auto start = Clock::now();
    Classification c = classify(parse_group_spec(spec));
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - start).count());
    std::vector<std::string> got;
    for (const auto& row : c.rows) {
      auto nonempty = [](const Locus& l) { return !l.is_empty(); };
      if (std::all_of(row.tuple.A.begin(), row.tuple.A.end(), nonempty) &&
          std::all_of(row.tuple.B.begin(), row.tuple.B.end(), nonempty)) {
        got.push_back(row.name);
      }
    }
    rows += got.size();
    r.expect(got == names, spec + " codim-one rows");
  }
  r.expect(rows == 6, "codim-one table has six rows");
  r.expect(slowest < 10.0, "a classification took longer than 10 s");
  std::ostringstream extra;
  extra.precision(3);
  extra << "slowest spec " << slowest << " s";
  return {5, "Classification tables", r.ok(), r.summary(extra.str()), 0};
}

CriterionResult euler_claims() {
  Report r;
  for (int l1 = 1; l1 <= 3; ++l1) {
    for (int l2 = 1; l2 <= 3; ++l2) {
      auto summand = ManifoldExpr::product({ManifoldExpr::sphere(2 * l1), ManifoldExpr::sphere(2 * l2)});
      Affine fam = euler(ManifoldExpr::conn_sum(summand, std::nullopt));
      r.expect(fam == Affine{2, 2}, "symbolic chi of #_k(S^" + std::to_string(2 * l1) + " x S^" + std::to_string(2 * l2) + ")");
      for (int k = 0; k <= 10; ++k) {
        r.expect(euler(ManifoldExpr::conn_sum(summand, k)) == Affine{2L * k + 2, 0}, "chi at k = " + std::to_string(k));
      }
    }
  }

  // every instance of the identification rules with l, m <= 4
  int rules = 0;
  auto check_rule = [&](const ManifoldExpr& e, const std::string& want) {
    ++rules;
    std::string name = canonical_name(e);
    r.expect(name == want, structural_name(e) + " named " + name + ", expected " + want);
    auto inv = invariants_from_name(name);
    r.expect(inv.has_value(), "cannot read invariants of " + name);
    if (!inv) return;
    r.expect(inv->chi == euler(e).constant, "rewrite of " + structural_name(e) + " changes chi");
    r.expect(inv->dim == dim(e), "rewrite of " + structural_name(e) + " changes dim");
  };
  auto cpow = [](const char* b, int n) { return std::string(b) + "^" + std::to_string(n); };
  for (int l = 1; l <= 4; ++l) {
    for (int m = 1; m <= 4; ++m) {
      // hyperplane CP^{m-1} in CP^m
      auto b1 = ManifoldExpr::proj_bundle_su(l, ManifoldExpr::cp(m), {1});
      check_rule(ManifoldExpr::blow_down(b1, node::Center{Locus{}, 2 * m - 2, m, node::BlowKind::Complex, l}),
                 cpow("CP", l + m));
      // codim-2 sphere pair S^{2m-2} x {N, S} in S^{2m}
      auto b2 = ManifoldExpr::proj_bundle_su(l, ManifoldExpr::sphere(2 * m), {1});
      if (m == 1) {
        check_rule(ManifoldExpr::blow_down(b2, node::Center{Locus{}, 0, 1, node::BlowKind::Complex, l}),
                   cpow("CP", l + 1));
      }
      check_rule(ManifoldExpr::blow_down(b2, node::Center{Locus{}, 2 * m - 2, 2, node::BlowKind::Complex, l}),
                 cpow("S", 2 * l + 2 * m));
      // fixed equator S^{2m-1} of the reflection
      auto q = ManifoldExpr::z2_quotient(2 * l, ManifoldExpr::sphere(2 * m), Z2ActionTag::reflection());
      check_rule(ManifoldExpr::blow_down(q, node::Center{Locus{}, 2 * m - 1, 0, node::BlowKind::Real, l}),
                 cpow("S", 2 * l + 2 * m));
    }
  }
  return {6, "Euler characteristic claims", r.ok(), r.summary(std::to_string(rules) + " rule instances"), 0};
}

CriterionResult orbit_space_dims() {
  Report r;
  std::mt19937 rng(20261015u);
  const std::vector<GroupFactor> pool = {GroupFactor::su(2),   GroupFactor::su(3),   GroupFactor::su(4),
                                         GroupFactor::su(5),   GroupFactor::so(3),   GroupFactor::so(4),
                                         GroupFactor::so(5),   GroupFactor::so(6),   GroupFactor::so(7),
                                         GroupFactor::so(8),   GroupFactor::spin(5), GroupFactor::spin(8),
                                         GroupFactor::spin(10), GroupFactor::sp(2)};
  std::uniform_int_distribution<int> nfac(1, 3), pick(0, static_cast<int>(pool.size()) - 1), torus(0, 3);
  for (int n = 0; n < 20; ++n) {
    GroupSpec spec;
    int count = nfac(rng);
    for (int i = 0; i < count; ++i) spec.factors.push_back(pool[pick(rng)]);
    spec.l0 = torus(rng);
    int want = spec.l0;
    for (const auto& f : spec.factors) {
      if ((f.kind == FactorKind::SO || f.kind == FactorKind::Spin) && f.n % 2 == 0) ++want;
    }
    const std::string s = to_string(spec);
    r.expect(orbit_space_dim(normalize_spec(spec)) == want, s + " orbit space dim");
    GroupSpec reduced = normalize_spec(spec, NormalizeOptions{true});
    r.expect(reduced.so_even_count() == 0, s + " still has SO(2l) after reduction");
    r.expect(orbit_space_dim(reduced) == want, s + " orbit space dim changes under SO(2l) reduction");
  }
  return {7, "Orbit-space dimension", r.ok(), r.summary("20 random specs"), 0};
}

CriterionResult round_trip() {
  Report r;
  auto start = Clock::now();
  std::size_t tuples = 0, steps = 0;
  for (const auto& s : small_specs()) {
    for (const auto& t : enumerate_tuples(parse_group_spec(s))) {
      ++tuples;
      const std::string name = canonical_name(realize(t));
      FiveTuple cur = t;
      while (cur.active > 0) {
        FiveTuple down = reduce(cur);
        ++steps;
        r.expect(equivalent(expand(down), cur), s + ": expand(reduce(t)) differs for " + serialize(cur));
        if (down.active < down.k()) {
          r.expect(equivalent(reduce(expand(down)), down), s + ": reduce(expand(s)) differs for " + serialize(down));
        }
        r.expect(canonical_name(realize(down)) == name, s + ": reduction changes the manifold");
        cur = std::move(down);
      }
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  r.expect(secs < 60.0, "round trip took longer than 60 s");
  std::ostringstream extra;
  extra << small_specs().size() << " specs, " << tuples << " tuples, " << steps << " reductions";
  return {8, "Round-trip reduce/expand", r.ok(), r.summary(extra.str()), 0};
}

// One random edit of a tuple touching one clause of the definition.
FiveTuple mutate(const FiveTuple& t, std::mt19937& rng) {
  FiveTuple m = t;
  auto uniform = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const int l0 = t.spec.l0;
  for (int attempt = 0; attempt < 16; ++attempt) {
    switch (uniform(6)) {
      case 0: {  // flip one a_ij
        if (t.slots() < 2) break;
        int i = uniform(t.slots() - 1);
        int j = i + 1 + uniform(t.slots() - 1 - i);
        m.a[i][j] ^= 1;
        return m;
      }
      case 1: {  // scale a weight vector, breaking primitivity
        if (t.k0() == 0 || l0 == 0) break;
        int i = uniform(t.k0());
        for (auto& x : m.psi[i]) x *= 2;
        return m;
      }
      case 2: {  // grow an A locus
        if (t.k0() == 0 || l0 == 0) break;
        int i = uniform(t.k0());
        auto extra = loci_of_codim(l0, 1 + uniform(2));
        const Locus& add = extra[uniform(static_cast<int>(extra.size()))];
        auto comps = m.A[i].components();
        comps.insert(comps.end(), add.components().begin(), add.components().end());
        if (Locus(comps) == m.A[i]) break;
        m.A[i] = Locus(comps);
        return m;
      }
      case 3: {  // grow a B locus
        if (t.slots() == 0 || l0 == 0) break;
        int s = uniform(t.slots());
        auto extra = loci_of_codim(l0, 1 + uniform(2));
        const Locus& add = extra[uniform(static_cast<int>(extra.size()))];
        auto comps = m.B[s].components();
        comps.insert(comps.end(), add.components().begin(), add.components().end());
        if (Locus(comps) == m.B[s]) break;
        m.B[s] = Locus(comps);
        return m;
      }
      case 4: {  // change one Z2 tag
        if (t.slots() == 0 || l0 == 0) break;
        int s = uniform(t.slots()), f = uniform(l0);
        m.base.slot_tags[s][f] = static_cast<Z2Tag>((static_cast<int>(m.base.slot_tags[s][f]) + 1 + uniform(2)) % 3);
        return m;
      }
      case 5: {  // replace a weight vector by an arbitrary one
        if (t.k0() == 0 || l0 == 0) break;
        int i = uniform(t.k0());
        for (auto& x : m.psi[i]) x = uniform(5) - 2;
        if (m.psi[i] == t.psi[i]) break;
        return m;
      }
    }
  }
  return m;
}

CriterionResult validator_necessity() {
  Report r;
  std::mt19937 rng(8061u);
  auto pool = tuple_pool();
  int breaking = 0, keeping = 0;
  for (int n = 0; n < 200; ++n) {
    const FiveTuple& base = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    FiveTuple m = mutate(base, rng);
    const bool ref = reference_admissible(m);
    const bool got = validate(m).empty();
    ref ? ++keeping : ++breaking;
    r.expect(ref == got, serialize(m) + (ref ? " rejected" : " accepted"));
  }
  r.expect(breaking > 0, "no mutation broke a clause");
  return {9, "Validator necessity", r.ok(),
          r.summary(std::to_string(breaking) + " breaking, " + std::to_string(keeping) + " harmless mutations"), 0};
}

CriterionResult flag_propagation() {
  Report r;
  const std::vector<std::string> all_su = {"SU(2)", "SU(3)", "SU(4)", "SU(2)xSU(2)", "SU(2)xSU(3)",
                                           "SU(3)xSU(3)", "SU(2)xSU(2)xSU(2)", "SU(2)xSU(2)xSU(3)"};
  for (const auto& s : all_su) {
    GroupSpec g = normalize_spec(parse_group_spec(s));
    Classification c = classify(g);
    r.expect(c.rows.size() == 1, s + " has exactly one class");
    if (c.rows.size() != 1) continue;
    std::vector<std::string> parts;
    for (const auto& f : g.factors) parts.push_back("CP^" + std::to_string(f.ell()));
    std::sort(parts.begin(), parts.end());
    std::string want;
    for (const auto& p : parts) want += (want.empty() ? "" : " x ") + p;
    r.expect(c.rows[0].name == want, s + " realizes " + c.rows[0].name);
    r.expect(c.rows[0].flags.quasitoric, s + " not quasitoric");
  }
  const std::vector<std::string> with_so = {"SO(3)",       "SO(5)",     "SU(2)xSO(3)", "SO(3)xSO(3)",
                                            "SO(3)xT^1",   "SO(5)xT^1", "SU(2)xSO(3)xT^1", "SO(3)xSO(3)xT^1"};
  for (const auto& s : with_so) {
    for (const auto& row : classify(parse_group_spec(s)).rows) {
      r.expect(!row.flags.quasitoric, s + " row " + row.name + " reported quasitoric");
    }
  }
  Classification reduced = classify(parse_group_spec("SO(4)xT^1"), ClassifyOptions{kDefaultPsiBound, true});
  for (const auto& row : reduced.rows) r.expect(!row.flags.quasitoric, "SO(4)xT^1 row " + row.name + " reported quasitoric");
  return {10, "Flag propagation", r.ok(), r.summary(), 0};
}

// ---- name oracle ------------------------------------------------------------------

struct NameParser {
  const std::string& s;
  std::size_t pos = 0;

  bool eat(const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) != 0) return false;
    pos += tok.size();
    return true;
  }
  std::optional<int> number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) return std::nullopt;
    return std::stoi(s.substr(start, pos - start));
  }
  std::optional<NameInvariants> atom() {
    if (eat("(")) {
      auto inner = product();
      if (!inner || !eat(")")) return std::nullopt;
      return inner;
    }
    if (eat("#_")) {
      auto k = number();
      if (!k || !eat("(")) return std::nullopt;
      auto inner = product();
      if (!inner || !eat(")")) return std::nullopt;
      return NameInvariants{inner->dim, 2 + *k * (inner->chi - 2)};
    }
    if (eat("CP^")) {
      auto n = number();
      if (!n) return std::nullopt;
      return NameInvariants{2 * *n, *n + 1};
    }
    if (eat("S^")) {
      auto n = number();
      if (!n || *n % 2 != 0) return std::nullopt;
      return NameInvariants{*n, 2};
    }
    if (eat("pt")) return NameInvariants{0, 1};
    return std::nullopt;
  }
  std::optional<NameInvariants> product() {
    auto acc = atom();
    while (acc && eat(" x ")) {
      auto next = atom();
      if (!next) return std::nullopt;
      acc = NameInvariants{acc->dim + next->dim, acc->chi * next->chi};
    }
    return acc;
  }
};

}  // namespace

std::optional<NameInvariants> invariants_from_name(const std::string& name) {
  NameParser p{name};
  auto out = p.product();
  if (!out || p.pos != name.size()) return std::nullopt;
  return out;
}

bool reference_admissible(const FiveTuple& t) {
  const int k0 = t.k0(), slots = t.slots(), l0 = t.spec.l0;
  if (static_cast<int>(t.A.size()) != k0 || static_cast<int>(t.B.size()) != slots) return false;
  if (t.base.slots() != slots) return false;

  auto pole = [](Piece p) { return p == Piece::North || p == Piece::South; };
  auto swap = [](Piece p) {
    return p == Piece::North ? Piece::South : p == Piece::South ? Piece::North : p;
  };
  auto comp_set = [](const Locus& l) {
    std::set<std::vector<Piece>> out;
    for (const auto& c : l.components()) out.insert(c.pieces);
    return out;
  };
  auto dims_ok = [&](const Locus& l, int codim) {
    for (const auto& c : l.components()) {
      int d = 0;
      for (Piece p : c.pieces) d += p == Piece::Whole ? 2 : p == Piece::Equator ? 1 : 0;
      if (2 * l0 - d != codim) return false;
    }
    return true;
  };
  auto disjoint = [&](const Locus& l) {
    const auto& cs = l.components();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        bool meet = true;
        for (int f = 0; f < l0; ++f) {
          Piece x = cs[i].pieces[f], y = cs[j].pieces[f];
          if (x != Piece::Whole && y != Piece::Whole && x != y) meet = false;
        }
        if (meet) return false;
      }
    }
    return true;
  };
  auto invariant = [&](const Locus& l) {
    const auto orig = comp_set(l);
    for (const auto& tags : t.base.slot_tags) {
      std::set<std::vector<Piece>> img;
      for (auto pieces : orig) {
        for (int f = 0; f < l0; ++f) {
          if (tags[f] != Z2Tag::Trivial) pieces[f] = swap(pieces[f]);
        }
        img.insert(pieces);
      }
      if (img != orig) return false;
    }
    return true;
  };
  auto nontrivial = [&](int s) {
    return std::any_of(t.base.slot_tags[s].begin(), t.base.slot_tags[s].end(), [](Z2Tag x) { return x != Z2Tag::Trivial; });
  };

  for (int i = 0; i < k0; ++i) {
    const Weights& w = t.psi[i];
    const Locus& A = t.A[i];
    if (static_cast<int>(w.size()) != l0) return false;
    if (!dims_ok(A, 2) || !disjoint(A) || !invariant(A)) return false;
    for (const auto& c : A.components()) {
      for (int f = 0; f < l0; ++f) {
        if (w[f] != 0 && !pole(c.pieces[f])) return false;
      }
    }
    if (!A.is_empty()) {
      std::int64_t g = 0;
      for (auto x : w) g = std::gcd(g, x < 0 ? -x : x);
      if (g != 1) return false;
    }
  }
  for (int s = 0; s < slots; ++s) {
    const Locus& B = t.B[s];
    if (!dims_ok(B, 1) || !disjoint(B) || !invariant(B)) return false;
    for (const auto& c : B.components()) {
      for (int f = 0; f < l0; ++f) {
        Z2Tag x = t.base.slot_tags[s][f];
        if (x == Z2Tag::Antipodal) return false;
        if (x == Z2Tag::Reflection && c.pieces[f] != Piece::Equator) return false;
      }
    }
    if (!B.is_empty() && !nontrivial(s)) return false;
    int sum = 0;
    for (int j = s + 1; j < slots; ++j) {
      if (!t.a[s][j]) continue;
      ++sum;
      if (nontrivial(j)) return false;
      for (int m = j + 1; m < slots; ++m) {
        if (t.a[j][m]) return false;
      }
      if (!B.is_empty()) return false;
    }
    if (nontrivial(s)) {
      int flips = std::count_if(t.base.slot_tags[s].begin(), t.base.slot_tags[s].end(),
                                [](Z2Tag x) { return x != Z2Tag::Trivial; });
      bool preserving = flips % 2 == 0;
      if (preserving != (sum % 2 == 1)) return false;
    } else if (sum != 0 && sum % 2 == 0) {
      return false;
    }
  }
  for (int i = 0; i < k0; ++i) {
    for (int j = i + 1; j < k0; ++j) {
      for (const auto& c : comp_set(t.A[i])) {
        if (comp_set(t.A[j]).count(c)) return false;
      }
    }
  }
  for (int i = 0; i < slots; ++i) {
    for (int j = i + 1; j < slots; ++j) {
      for (const auto& c : comp_set(t.B[i])) {
        if (comp_set(t.B[j]).count(c)) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> small_specs() {
  // factor codes: (rank, is_so)
  std::vector<std::pair<int, bool>> kinds;
  for (int l = 1; l <= 4; ++l) {
    kinds.push_back({l, false});
    kinds.push_back({l, true});
  }
  std::vector<std::string> out;
  std::vector<int> chosen;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int budget, int l0) {
    if (!chosen.empty() || l0 > 0) {
      std::string s;
      std::vector<std::string> su, so;
      for (int c : chosen) {
        auto [l, is_so] = kinds[c];
        (is_so ? so : su).push_back(is_so ? "SO(" + std::to_string(2 * l + 1) + ")" : "SU(" + std::to_string(l + 1) + ")");
      }
      for (const auto& x : su) s += (s.empty() ? "" : "x") + x;
      for (const auto& x : so) s += (s.empty() ? "" : "x") + x;
      if (l0 > 0) s += (s.empty() ? "" : "x") + ("T^" + std::to_string(l0));
      out.push_back(s);
    }
    for (std::size_t c = from; c < kinds.size(); ++c) {
      if (kinds[c].first > budget) continue;
      chosen.push_back(static_cast<int>(c));
      rec(c, budget - kinds[c].first, l0);
      chosen.pop_back();
    }
  };
  for (int l0 = 0; l0 <= 2; ++l0) rec(0, 4 - l0, l0);
  return out;
}

std::vector<FiveTuple> tuple_pool() {
  std::vector<FiveTuple> out;
  for (const char* s : {"SU(2)xT^1", "SO(3)xT^1", "SO(3)xSO(3)", "SO(3)xSO(3)xSO(3)", "SO(3)xSO(3)xT^1",
                        "SU(2)xSU(2)xT^1", "SU(2)xSO(3)xT^1", "SU(3)xT^1", "SU(2)xT^2", "SO(3)xT^2",
                        "SU(2)xSO(3)xT^2"}) {
    auto ts = enumerate_tuples(parse_group_spec(s));
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

CriterionResult run_one(int id) {
  static const std::vector<std::function<CriterionResult()>> all = {
      weyl_orders,         reflection_fingerprints, detection_round_trip, static_tables,
      classification_tables, euler_claims,         orbit_space_dims,     round_trip,
      validator_necessity, flag_propagation,
  };
  if (id < 1 || id > kCriteria) throw InputError("no acceptance criterion " + std::to_string(id));
  auto start = Clock::now();
  CriterionResult r;
  try {
    r = all[id - 1]();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_one(id));
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace torus::acceptance
