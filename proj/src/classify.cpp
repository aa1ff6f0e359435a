#include "torusclass/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "torusclass/error.hpp"

namespace torus {

namespace {

void require_catalog_range(int l0) {
  if (l0 < 0 || l0 > kMaxCatalogTorusRank) {
    throw UnsupportedError("torus rank l0 = " + std::to_string(l0) +
                           " is outside the base catalog (l0 <= 2 supported)");
  }
}

std::vector<Weights> all_weights(int l0, int bound) {
  std::vector<Weights> out;
  Weights w(l0, -bound);
  while (true) {
    out.push_back(w);
    int i = l0 - 1;
    while (i >= 0 && w[i] == bound) w[i--] = -bound;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

bool invariant(const Locus& l, const CatalogBase& base) {
  return std::all_of(base.slot_tags.begin(), base.slot_tags.end(),
                     [&](const std::vector<Z2Tag>& tags) { return l.image(tags) == l; });
}

struct SuOption {
  Weights psi;
  Locus A;
};

// Local clauses of one SU factor; the global ones are left to validate().
std::vector<SuOption> su_options(const CatalogBase& base, const std::vector<Weights>& weights,
                                 const std::vector<Locus>& loci) {
  std::vector<SuOption> out;
  for (const auto& w : weights) {
    for (const auto& A : loci) {
      if (!A.fixed_by_circle(w) || !invariant(A, base)) continue;
      if (!A.is_empty() && !psi_kernel_is_su(w)) continue;
      out.push_back({w, A});
    }
  }
  return out;
}

std::vector<Locus> so_options(const CatalogBase& base, int slot, const std::vector<Locus>& loci) {
  std::vector<Locus> out;
  for (const auto& B : loci) {
    if (!B.is_empty() && (!invariant(B, base) || !B.pointwise_fixed_by(base.slot_tags[slot]) ||
                          !base.slot_nontrivial(slot))) {
      continue;
    }
    out.push_back(B);
  }
  return out;
}

bool is_verified(const GroupSpec& normalized, const FiveTuple& t, bool reduced) {
  if (reduced) return false;
  const int k = normalized.factors.size();
  const int l0 = normalized.l0;
  if (k == 0) return l0 <= 1;
  const bool all_su = std::all_of(normalized.factors.begin(), normalized.factors.end(),
                                  [](const GroupFactor& f) { return f.is_su(); });
  if (l0 == 0) return all_su || k <= 2;
  if (l0 == 1 && normalized.rank() == 2) return true;
  // codimension-one orbit rows: every locus nonempty over S^2
  if (l0 == 1 && k <= 2) {
    auto nonempty = [](const Locus& l) { return !l.is_empty(); };
    return std::all_of(t.A.begin(), t.A.end(), nonempty) && std::all_of(t.B.begin(), t.B.end(), nonempty);
  }
  return false;
}

// Representative choice inside a class: positive weights first, then the
// smallest serialization.
bool preferred(const FiveTuple& x, const FiveTuple& y) {
  if (x.psi != y.psi) return x.psi > y.psi;
  return serialize(x) < serialize(y);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::vector<CatalogEntry> base_catalog(int l0, int z2_slots) {
  require_catalog_range(l0);
  if (z2_slots < 0) throw InputError("negative Z2 slot count");
  std::vector<ManifoldExpr> spheres(l0, ManifoldExpr::sphere(2));
  ManifoldExpr expr = ManifoldExpr::product(spheres);
  const int cells = l0 * z2_slots;
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= 3;
  std::vector<CatalogEntry> out;
  for (long code = 0; code < total; ++code) {
    CatalogBase b;
    b.l0 = l0;
    b.slot_tags.assign(z2_slots, std::vector<Z2Tag>(l0, Z2Tag::Trivial));
    long c = code;
    // first cell varies slowest, giving T < A < R order on a single cell
    for (int cell = cells - 1; cell >= 0; --cell) {
      b.slot_tags[cell / l0][cell % l0] = static_cast<Z2Tag>(c % 3);
      c /= 3;
    }
    out.push_back({expr, std::move(b)});
  }
  return out;
}

std::vector<FiveTuple> enumerate_tuples(const GroupSpec& spec, const ClassifyOptions& opts) {
  if (opts.psi_bound < 0) throw InputError("psi bound must be non-negative");
  const GroupSpec g = normalize_spec(spec, NormalizeOptions{opts.reduce_so_even});
  if (g.so_even_count() > 0) {
    throw UnsupportedError("SO(2l) factors are not tuple factors; use --reduce-so-even or --family for " +
                           to_string(g));
  }
  require_catalog_range(g.l0);
  const int k0 = g.su_count();
  const int slots = g.so_odd_count();
  const auto weights = all_weights(g.l0, opts.psi_bound);
  const auto loci2 = loci_of_codim(g.l0, 2);
  const auto loci1 = loci_of_codim(g.l0, 1);
  const int pairs = slots * (slots - 1) / 2;

  std::map<std::string, FiveTuple> classes;
  for (const auto& entry : base_catalog(g.l0, slots)) {
    const CatalogBase& base = entry.base;
    const auto su_opts = su_options(base, weights, loci2);
    std::vector<std::vector<Locus>> so_opts;
    for (int s = 0; s < slots; ++s) so_opts.push_back(so_options(base, s, loci1));
    if (k0 > 0 && su_opts.empty()) continue;

    // mixed-radix odometer over SU options, SO options and the a matrix
    std::vector<std::size_t> idx(k0 + slots, 0);
    std::vector<std::size_t> radix;
    for (int i = 0; i < k0; ++i) radix.push_back(su_opts.size());
    for (int s = 0; s < slots; ++s) radix.push_back(so_opts[s].size());
    while (true) {
      for (unsigned amask = 0; amask < (1u << pairs); ++amask) {
        FiveTuple t;
        t.spec = g;
        t.base = base;
        for (int i = 0; i < k0; ++i) {
          t.psi.push_back(su_opts[idx[i]].psi);
          t.A.push_back(su_opts[idx[i]].A);
        }
        for (int s = 0; s < slots; ++s) t.B.push_back(so_opts[s][idx[k0 + s]]);
        t.a.assign(slots, std::vector<int>(slots, 0));
        int bit = 0;
        for (int i = 0; i < slots; ++i) {
          for (int j = i + 1; j < slots; ++j) t.a[i][j] = (amask >> bit++) & 1u;
        }
        t.active = g.factors.size();
        if (!is_valid(t)) continue;
        auto key = canonical_key(t);
        auto it = classes.find(key);
        if (it == classes.end()) {
          classes.emplace(std::move(key), std::move(t));
        } else if (preferred(t, it->second)) {
          it->second = std::move(t);
        }
      }
      std::size_t p = 0;
      while (p < idx.size() && ++idx[p] == radix[p]) idx[p++] = 0;
      if (p == idx.size()) break;
    }
  }

  std::vector<std::pair<std::string, FiveTuple>> named;
  for (auto& [key, t] : classes) named.emplace_back(canonical_name(realize(t)) + "\n" + key, std::move(t));
  std::sort(named.begin(), named.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<FiveTuple> out;
  for (auto& [_, t] : named) out.push_back(std::move(t));
  return out;
}

Classification classify(const GroupSpec& spec, const ClassifyOptions& opts) {
  Classification c;
  c.input = spec;
  c.normalized = normalize_spec(spec, NormalizeOptions{opts.reduce_so_even});
  const int osd = orbit_space_dim(normalize_spec(spec));
  const bool has_so = normalize_spec(spec).so_odd_count() + normalize_spec(spec).so_even_count() > 0;
  for (auto& t : enumerate_tuples(spec, opts)) {
    ClassRow r;
    ManifoldExpr m = realize(t);
    r.name = canonical_name(m);
    r.chi = euler(m);
    r.dim = dim(m);
    r.orbit_space_dim = osd;
    r.flags = propagate_flags(t);
    if (has_so) {
      r.flags.quasitoric = false;
      r.flags.cohomology_deg2 = false;
    }
    r.verified = is_verified(c.normalized, t, opts.reduce_so_even && !(c.normalized == normalize_spec(spec)));
    r.tuple = std::move(t);
    c.rows.push_back(std::move(r));
  }
  return c;
}

FamilyAnswer family_answer(const GroupSpec& spec) {
  const GroupSpec g = normalize_spec(spec);
  auto even = [](const GroupFactor& f) { return f.is_so_even(); };
  FamilyAnswer f;
  f.spec = g;
  int other = 0;
  if (g.factors.size() == 1 && even(g.factors[0]) && g.l0 == 1) {
    other = 2;
  } else if (g.factors.size() == 2 && even(g.factors[0]) && even(g.factors[1]) && g.l0 == 0) {
    other = 2 * g.factors[1].ell();
  } else {
    throw UnsupportedError("family answers exist for SO(2l1)xT^1 and SO(2l1)xSO(2l2) only, not " + to_string(g));
  }
  const int d1 = 2 * g.factors[0].ell();
  f.family = ManifoldExpr::conn_sum(ManifoldExpr::product({ManifoldExpr::sphere(d1), ManifoldExpr::sphere(other)}),
                                    std::nullopt);
  f.sphere = ManifoldExpr::sphere(d1 + other);
  f.chi = euler(f.family);
  f.description = canonical_name(f.family) + ", k >= 1, or " + canonical_name(f.sphere);
  return f;
}

std::string render(const Classification& c) {
  std::ostringstream os;
  os << "# " << to_string(c.input);
  if (!(c.normalized == c.input)) os << " (as " << to_string(c.normalized) << ")";
  os << ": " << c.rows.size() << (c.rows.size() == 1 ? " class" : " classes");
  if (!c.rows.empty()) os << ", orbit space dim " << c.rows.front().orbit_space_dim;
  os << '\n';
  std::size_t w = 4;
  for (const auto& r : c.rows) w = std::max(w, r.name.size());
  os << pad("name", w) << "  chi  dim  quasitoric  simply_connected  tuple\n";
  for (const auto& r : c.rows) {
    os << pad(r.name, w) << "  " << pad(r.chi.to_string(), 3) << "  " << pad(std::to_string(r.dim), 3) << "  "
       << pad(yes_no(r.flags.quasitoric), 10) << "  " << pad(to_string(r.flags.simply_connected), 16) << "  "
       << serialize(r.tuple);
    if (!r.verified) os << "  [unverified]";
    os << '\n';
  }
  return os.str();
}

std::string render(const FamilyAnswer& f) {
  std::ostringstream os;
  os << "# " << to_string(f.spec) << " (simply connected)\n";
  const std::string fam = canonical_name(f.family);
  const std::string sph = canonical_name(f.sphere);
  const std::size_t w = std::max(fam.size(), sph.size());
  os << pad(fam, w) << "  chi " << f.chi.to_string() << "  k >= 1\n";
  os << pad(sph, w) << "  chi " << euler(f.sphere).to_string() << "  k = 0\n";
  return os.str();
}

}  // namespace torus
