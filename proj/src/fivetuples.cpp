#include "torusclass/fivetuples.hpp"

#include <algorithm>
#include <sstream>

#include "torusclass/error.hpp"

namespace torus {

namespace {

bool sum_is_odd_or_zero(int s) { return s == 0 || s % 2 == 1; }

std::string weights_to_string(const Weights& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

// Shape problems make every other clause meaningless, so they are reported alone.
std::vector<Violation> shape_violations(const FiveTuple& t) {
  std::vector<Violation> out;
  auto bad = [&](std::string what) { out.push_back({"shape", 0, std::move(what)}); };
  const int k = t.k(), k0 = t.k0(), slots = t.slots();
  for (int i = 0; i < k; ++i) {
    const auto& f = t.spec.factors[i];
    bool want_su = i < k0;
    if (want_su ? !f.is_su() : !f.is_so_odd()) {
      bad("factor " + std::to_string(i + 1) + " (" + to_string(f) + ") out of place: SU factors first, then SO(odd)");
    }
  }
  if (t.base.l0 != t.spec.l0) bad("base torus rank differs from l0");
  if (t.base.slots() != slots) bad("one Z2 tag row per SO factor expected");
  for (const auto& row : t.base.slot_tags) {
    if (static_cast<int>(row.size()) != t.base.l0) bad("Z2 tag row length differs from l0");
  }
  if (static_cast<int>(t.A.size()) != k0) bad("one A locus per SU factor expected");
  if (static_cast<int>(t.B.size()) != slots) bad("one B locus per SO factor expected");
  auto check_locus = [&](const Locus& l) {
    for (const auto& c : l.components()) {
      if (static_cast<int>(c.pieces.size()) != t.spec.l0) bad("locus " + l.to_string() + " lives on a different base");
    }
  };
  for (const auto& l : t.A) check_locus(l);
  for (const auto& l : t.B) check_locus(l);
  if (static_cast<int>(t.a.size()) != slots) {
    bad("a must be a square matrix over the SO factors");
  } else {
    for (int i = 0; i < slots; ++i) {
      if (static_cast<int>(t.a[i].size()) != slots) {
        bad("a must be a square matrix over the SO factors");
        break;
      }
      for (int j = 0; j < slots; ++j) {
        int v = t.a[i][j];
        if (v != 0 && v != 1) bad("a entries must be 0 or 1");
        if (j <= i && v != 0) bad("a must be strictly upper triangular");
      }
    }
  }
  if (t.active < 0 || t.active > k) bad("active factor count out of range");
  return out;
}

bool invariant_under_slots(const FiveTuple& t, const Locus& l) {
  return std::all_of(t.base.slot_tags.begin(), t.base.slot_tags.end(),
                     [&](const std::vector<Z2Tag>& tags) { return l.image(tags) == l; });
}

// Z2 of slot s on the base obtained by folding every factor with index >= level.
bool folded_nontrivial(const FiveTuple& t, int s, int level) {
  if (t.base.slot_nontrivial(s)) return true;
  for (int j = s + 1; j < t.slots(); ++j) {
    if (t.k0() + j >= level && t.a[s][j]) return true;
  }
  return false;
}

bool folded_reverses(const FiveTuple& t, int s, int level) {
  bool rev = t.base.slot_nontrivial(s) && t.base.slot_reverses_orientation(s);
  for (int j = s + 1; j < t.slots(); ++j) {
    // antipodal on an even sphere reverses orientation
    if (t.k0() + j >= level && t.a[s][j]) rev = !rev;
  }
  return rev;
}

void check_factor(const FiveTuple& t, int i, int level, const std::string& prefix,
                  std::vector<Violation>& out) {
  auto fail = [&](const char* clause, std::string detail) {
    out.push_back({prefix + clause, i + 1, std::move(detail)});
  };
  const int k0 = t.k0();
  if (i < k0) {
    const Weights& w = t.psi[i];
    const Locus& A = t.A[i];
    if (static_cast<int>(w.size()) != t.spec.l0) {
      fail("1", "psi weight vector must have length l0");
      return;
    }
    if (!A.is_empty() && A.codim() != 2) fail("3", "A must have codimension 2");
    if (!A.is_submanifold()) fail("3", "components of A intersect");
    if (!invariant_under_slots(t, A)) fail("3", "A is not invariant under the Z2 actions");
    if (!A.fixed_by_circle(w)) fail("3", "image of psi does not fix A pointwise");
    if (!A.is_empty() && !psi_kernel_is_su(w)) fail("3 kernel", "A nonempty needs a primitive psi " + weights_to_string(w));
    return;
  }
  const int s = i - k0;
  const Locus& B = t.B[s];
  const bool nontrivial = folded_nontrivial(t, s, level);
  bool folded_twist = false;
  int active_sum = 0;
  for (int j = s + 1; j < t.slots(); ++j) {
    if (!t.a[s][j]) continue;
    if (k0 + j >= level) {
      folded_twist = true;
    } else {
      ++active_sum;
    }
  }
  if (!B.is_empty()) {
    if (B.codim() != 1) fail("4", "B must have codimension 1");
    if (!B.is_submanifold()) fail("4", "components of B intersect");
    if (!invariant_under_slots(t, B)) fail("4", "B is not invariant under the Z2 actions");
    if (!B.pointwise_fixed_by(t.base.slot_tags[s]) || folded_twist) fail("4", "Z2 does not fix B pointwise");
    if (!nontrivial) fail("4 nontrivial", "B nonempty needs a nontrivial Z2 action on N");
  }
  for (int j = s + 1; j < t.slots(); ++j) {
    if (!t.a[s][j]) continue;
    const std::string pair = "a" + std::to_string(i + 1) + std::to_string(k0 + j + 1) + " = 1";
    if (folded_nontrivial(t, j, level)) fail("5(a)(i)", pair + " but Z2 of factor " + std::to_string(k0 + j + 1) + " is nontrivial");
    for (int m = j + 1; m < t.slots(); ++m) {
      if (k0 + m < level && t.a[j][m]) fail("5(a)(ii)", pair + " but row " + std::to_string(k0 + j + 1) + " is nonzero");
    }
    if (!B.is_empty()) fail("5(a)(iii)", pair + " but B is nonempty");
  }
  if (nontrivial) {
    const bool preserving = !folded_reverses(t, s, level);
    if (preserving != (active_sum % 2 == 1)) {
      fail("5(b) parity", std::string("Z2 is orientation ") + (preserving ? "preserving" : "reversing") +
                              " but the row sum is " + std::to_string(active_sum));
    }
  } else if (!sum_is_odd_or_zero(active_sum)) {
    fail("5(c)", "trivial Z2 needs an odd or zero row sum, got " + std::to_string(active_sum));
  }
}

// ---- folding ----------------------------------------------------------------

struct FoldState {
  ManifoldExpr expr = ManifoldExpr::point();
  std::vector<Z2ActionTag> tags;
};

FoldState catalog_state(const CatalogBase& base) {
  FoldState st;
  std::vector<ManifoldExpr> spheres(base.l0, ManifoldExpr::sphere(2));
  st.expr = ManifoldExpr::product(spheres);
  for (const auto& row : base.slot_tags) {
    if (row.empty()) {
      st.tags.push_back(Z2ActionTag::trivial());
    } else if (row.size() == 1) {
      st.tags.push_back(Z2ActionTag::from(row[0]));
    } else {
      std::vector<Z2ActionTag> parts;
      for (Z2Tag x : row) parts.push_back(Z2ActionTag::from(x));
      st.tags.push_back(Z2ActionTag::product(std::move(parts)));
    }
  }
  return st;
}

bool slot_step_trivial(const FiveTuple& t, int s) { return !folded_nontrivial(t, s, t.k0() + s + 1); }

// Euler characteristic of the saturation of a catalog component in the
// manifold obtained by folding the factors >= level.
std::int64_t sat_euler(const FiveTuple& t, const LocusComponent& c, int level) {
  std::int64_t e = c.euler();
  for (int i = t.k() - 1; i >= level; --i) {
    const int l = t.spec.factors[i].ell();
    if (i < t.k0()) {
      std::int64_t collapsed = 0;
      for (const auto& d : t.A[i].components()) {
        if (auto x = intersect(c, d)) collapsed += sat_euler(t, *x, i + 1);
      }
      e = (l + 1) * e - l * collapsed;
    } else if (slot_step_trivial(t, i - t.k0())) {
      e *= 2;
    }
  }
  return e;
}

std::int64_t sat_euler(const FiveTuple& t, const Locus& l, int level) {
  std::int64_t e = 0;
  for (const auto& c : l.components()) e += sat_euler(t, c, level);
  return e;
}

FoldState fold(const FiveTuple& t, int from) {
  FoldState st = catalog_state(t.base);
  const int k0 = t.k0();
  for (int i = t.k() - 1; i >= from; --i) {
    const int l = t.spec.factors[i].ell();
    const int d = dim(st.expr);
    if (i >= k0) {
      const int s = i - k0;
      if (slot_step_trivial(t, s)) {
        const bool was_point = d == 0;
        st.expr = was_point ? ManifoldExpr::sphere(2 * l)
                            : ManifoldExpr::product({ManifoldExpr::sphere(2 * l), st.expr});
        for (int r = 0; r < s; ++r) {
          auto on_sphere = t.a[r][s] ? Z2ActionTag::antipodal() : Z2ActionTag::trivial();
          st.tags[r] = was_point ? on_sphere : Z2ActionTag::product({on_sphere, st.tags[r]});
        }
      } else {
        ManifoldExpr q = ManifoldExpr::z2_quotient(2 * l, st.expr, st.tags[s]);
        if (!t.B[s].is_empty()) {
          node::Center c{t.B[s], d - 1, sat_euler(t, t.B[s], i + 1), node::BlowKind::Real, l};
          q = ManifoldExpr::blow_down(std::move(q), std::move(c));
        }
        st.expr = std::move(q);
      }
    } else if (t.spec.l0 == 0) {
      // psi is necessarily trivial and A empty: a plain product
      st.expr = d == 0 ? ManifoldExpr::cp(l) : ManifoldExpr::product({ManifoldExpr::cp(l), st.expr});
    } else {
      ManifoldExpr b = ManifoldExpr::proj_bundle_su(l, st.expr, t.psi[i]);
      if (!t.A[i].is_empty()) {
        node::Center c{t.A[i], d - 2, sat_euler(t, t.A[i], i + 1), node::BlowKind::Complex, l};
        b = ManifoldExpr::blow_down(std::move(b), std::move(c));
      }
      st.expr = std::move(b);
    }
  }
  return st;
}

void require_valid(const FiveTuple& t, const char* what) {
  auto v = validate(t);
  if (!v.empty()) {
    throw InputError(std::string(what) + ": invalid tuple, clause " + v.front().clause + ": " + v.front().detail);
  }
}

std::string loci_to_string(const std::vector<Locus>& loci, int from, int to) {
  std::string out = "[";
  for (int i = from; i < to; ++i) {
    if (i > from) out += ',';
    out += loci[i].to_string();
  }
  return out + "]";
}

}  // namespace

FiveTuple make_tuple(GroupSpec spec, std::vector<Weights> psi, CatalogBase base, std::vector<Locus> A,
                     std::vector<Locus> B, std::vector<std::vector<int>> a) {
  FiveTuple t;
  t.spec = std::move(spec);
  t.psi = std::move(psi);
  t.base = std::move(base);
  t.A = std::move(A);
  t.B = std::move(B);
  const int slots = t.k() - t.k0();
  if (slots < 0) throw InputError("more psi entries than factors");
  t.a = a.empty() ? std::vector<std::vector<int>>(slots, std::vector<int>(slots, 0)) : std::move(a);
  t.active = t.k();
  if (auto v = shape_violations(t); !v.empty()) throw InputError("tuple shape: " + v.front().detail);
  return t;
}

std::vector<Violation> check_level(const FiveTuple& t, int level) {
  if (auto v = shape_violations(t); !v.empty()) return v;
  if (level < 0 || level > t.k()) throw InputError("level out of range");
  std::vector<Violation> out;
  for (int i = 0; i < level; ++i) check_factor(t, i, level, "", out);
  return out;
}

std::vector<Violation> validate(const FiveTuple& t) {
  if (auto v = shape_violations(t); !v.empty()) return v;
  std::vector<Violation> out = check_level(t, t.active);
  for (int i = t.active; i < t.k(); ++i) check_factor(t, i, t.k(), "base ", out);
  for (int i = 0; i < t.k0(); ++i) {
    for (int j = i + 1; j < t.k0(); ++j) {
      if (t.A[i].shares_component(t.A[j])) {
        out.push_back({"transversality A", i + 1, "A" + std::to_string(i + 1) + " and A" + std::to_string(j + 1) + " share a component"});
      }
    }
  }
  for (int i = 0; i < t.slots(); ++i) {
    for (int j = i + 1; j < t.slots(); ++j) {
      if (t.B[i].shares_component(t.B[j])) {
        out.push_back({"transversality B", t.k0() + i + 1,
                       "B" + std::to_string(t.k0() + i + 1) + " and B" + std::to_string(t.k0() + j + 1) + " share a component"});
      }
    }
  }
  return out;
}

std::string canonical_key(const FiveTuple& t) {
  std::ostringstream head;
  head << to_string(t.spec) << '|' << t.active << '|';
  for (const auto& row : t.base.slot_tags) {
    for (Z2Tag x : row) head << to_string(x);
    head << ';';
  }
  head << '|';
  for (int i = 0; i < t.k0(); ++i) {
    Weights w = t.psi[i];
    if (t.spec.factors[i].ell() == 1) {
      Weights neg = w;
      for (auto& x : neg) x = -x;
      w = std::max(w, neg);
    }
    head << weights_to_string(w);
  }
  head << '|';
  for (const auto& row : t.a) {
    for (int x : row) head << x;
  }
  std::string best;
  for (unsigned mask = 0; mask < t.base.automorphism_count(); ++mask) {
    std::string s = "|";
    for (const auto& l : t.A) s += l.swap_poles(mask).to_string();
    s += '|';
    for (const auto& l : t.B) s += l.swap_poles(mask).to_string();
    if (mask == 0 || s < best) best = s;
  }
  return head.str() + best;
}

bool equivalent(const FiveTuple& t1, const FiveTuple& t2) {
  if (!(t1.spec == t2.spec) || t1.active != t2.active) throw InputError("tuples of different specs are not comparable");
  return canonical_key(t1) == canonical_key(t2);
}

FiveTuple reduce(const FiveTuple& t) {
  require_valid(t, "reduce");
  if (t.active == 0) throw InputError("reduce: no tuple factor left");
  FiveTuple r = t;
  --r.active;
  return r;
}

FiveTuple expand(const FiveTuple& t) {
  if (auto v = shape_violations(t); !v.empty()) throw InputError("expand: " + v.front().detail);
  if (t.active == t.k()) throw InputError("expand: no folded factor to unfold");
  FiveTuple e = t;
  ++e.active;
  require_valid(e, "expand");
  return e;
}

BaseView base_view(const FiveTuple& t) {
  if (auto v = shape_violations(t); !v.empty()) throw InputError("base: " + v.front().detail);
  FoldState st = fold(t, t.active);
  BaseView out;
  out.expr = st.expr;
  const int live = std::max(0, t.active - t.k0());
  out.slot_actions.assign(st.tags.begin(), st.tags.begin() + live);
  if (live == 0) {
    out.name = canonical_name(st.expr);
  } else if (live == 1) {
    out.name = tagged_name(st.expr, out.slot_actions[0]);
  } else if (t.active == t.k()) {
    out.name = t.base.to_string();
  } else {
    out.name = canonical_name(st.expr) + "[";
    for (int s = 0; s < live; ++s) out.name += (s ? ";" : "") + tagged_name(st.expr, out.slot_actions[s]);
    out.name += "]";
  }
  return out;
}

ManifoldExpr realize(const FiveTuple& t) {
  require_valid(t, "realize");
  return fold(t, 0).expr;
}

PropagationFlags propagate_flags(const FiveTuple& t) {
  PropagationFlags f;
  // every catalog base is quasitoric; SO factors rule it out
  bool connected = std::all_of(t.A.begin(), t.A.end(), [](const Locus& l) { return l.connected(); });
  f.quasitoric = t.slots() == 0 && connected;
  f.cohomology_deg2 = f.quasitoric;
  f.simply_connected = simply_connected(realize(t));
  return f;
}

GroupSpec active_spec(const FiveTuple& t) {
  GroupSpec g;
  g.l0 = t.spec.l0;
  g.factors.assign(t.spec.factors.begin(), t.spec.factors.begin() + t.active);
  return g;
}

std::vector<std::pair<std::string, std::string>> fields(const FiveTuple& t) {
  const int k0a = std::min(t.active, t.k0());
  std::string psi = "[";
  for (int i = 0; i < k0a; ++i) psi += (i ? "," : "") + weights_to_string(t.psi[i]);
  psi += "]";
  std::string a = "[";
  bool first = true;
  for (int s = 0; t.k0() + s < t.active; ++s) {
    for (int j = s + 1; t.k0() + j < t.active; ++j) {
      a += (first ? "" : ",") + ("a" + std::to_string(t.k0() + s + 1) + std::to_string(t.k0() + j + 1) + "=" +
                                 std::to_string(t.a[s][j]));
      first = false;
    }
  }
  a += "]";
  return {
      {"spec", to_string(active_spec(t))},
      {"psi", psi},
      {"base", base_view(t).name},
      {"A", loci_to_string(t.A, 0, k0a)},
      {"B", loci_to_string(t.B, 0, std::max(0, t.active - t.k0()))},
      {"a", a},
  };
}

std::string serialize(const FiveTuple& t) {
  std::string out;
  for (const auto& [k, v] : fields(t)) out += (out.empty() ? "" : "; ") + k + "=" + v;
  return out;
}

}  // namespace torus
