#include "torusclass/manifolds.hpp"

#include <algorithm>
#include <sstream>

#include "torusclass/error.hpp"

namespace torus {

Z2ActionTag Z2ActionTag::from(Z2Tag t) {
  switch (t) {
    case Z2Tag::Trivial: return trivial();
    case Z2Tag::Antipodal: return antipodal();
    case Z2Tag::Reflection: return reflection();
  }
  return trivial();
}

bool Z2ActionTag::is_trivial() const {
  if (kind == Kind::Trivial) return true;
  if (kind != Kind::Product) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const Z2ActionTag& c) { return c.is_trivial(); });
}

std::string Affine::to_string() const {
  std::ostringstream os;
  if (k_coeff == 0) {
    os << constant;
    return os.str();
  }
  if (k_coeff == 1) {
    os << 'k';
  } else if (k_coeff == -1) {
    os << "-k";
  } else {
    os << k_coeff << 'k';
  }
  if (constant > 0) os << '+' << constant;
  if (constant < 0) os << constant;
  return os.str();
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Affine mul(const Affine& a, const Affine& b) {
  if (!a.is_constant() && !b.is_constant()) {
    throw UnsupportedError("Euler characteristic of a product of two families");
  }
  return {a.constant * b.constant, a.constant * b.k_coeff + a.k_coeff * b.constant};
}

std::string pow_name(const char* base, int exp) {
  return std::string(base) + "^" + std::to_string(exp);
}

// Wrap names that contain a binary operator so they nest unambiguously.
std::string paren(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

ManifoldExpr ManifoldExpr::point() { return ManifoldExpr(node::Point{}); }

ManifoldExpr ManifoldExpr::sphere(int d) {
  if (d < 2 || d % 2 != 0) throw InputError("only even spheres of dimension >= 2 are catalog nodes");
  return ManifoldExpr(node::EvenSphere{d});
}

ManifoldExpr ManifoldExpr::cp(int l) {
  if (l < 1) throw InputError("CP^l needs l >= 1");
  return ManifoldExpr(node::ComplexProjective{l});
}

ManifoldExpr ManifoldExpr::product(std::vector<ManifoldExpr> children) {
  if (children.empty()) return point();
  if (children.size() == 1) return children.front();
  return ManifoldExpr(node::Product{std::move(children)});
}

ManifoldExpr ManifoldExpr::conn_sum(ManifoldExpr summand, std::optional<int> k) {
  if (k && *k < 0) throw InputError("connected-sum count must be >= 0");
  if (dim(summand) == 0) throw InputError("connected sums of points are undefined");
  return ManifoldExpr(node::ConnSumFamily{std::make_shared<const ManifoldExpr>(std::move(summand)), k});
}

ManifoldExpr ManifoldExpr::z2_quotient(int sphere_dim, ManifoldExpr inner, Z2ActionTag action) {
  if (sphere_dim < 2 || sphere_dim % 2 != 0) throw InputError("Z2 quotient needs an even sphere");
  if (!reverses_orientation(inner, action)) {
    throw InputError("Z2 quotient would be non-orientable: inner action preserves orientation");
  }
  return ManifoldExpr(node::Z2Quotient{
      sphere_dim, std::make_shared<const ManifoldExpr>(std::move(inner)), std::move(action)});
}

ManifoldExpr ManifoldExpr::proj_bundle_su(int l, ManifoldExpr fiber, Weights psi) {
  if (l < 1) throw InputError("projective bundle needs l >= 1");
  return ManifoldExpr(
      node::ProjBundleSU{l, std::make_shared<const ManifoldExpr>(std::move(fiber)), std::move(psi)});
}

ManifoldExpr ManifoldExpr::rp_bundle(int l, ManifoldExpr base) {
  if (l < 1) throw InputError("RP^{2l} bundle needs l >= 1");
  return ManifoldExpr(node::RP2lBundle{l, std::make_shared<const ManifoldExpr>(std::move(base))});
}

ManifoldExpr ManifoldExpr::blow_down(ManifoldExpr bundle, node::Center center) {
  if (center.kind == node::BlowKind::Complex) {
    const auto* pb = bundle.as<node::ProjBundleSU>();
    if (!pb) throw InputError("complex blow down needs a projective bundle");
    if (pb->l != center.fiber_l) throw InputError("blow-down fiber rank mismatch");
    if (center.dim != dim(*pb->fiber) - 2) throw InputError("complex blow-down center must have codim 2 in the fiber");
  } else {
    const auto* q = bundle.as<node::Z2Quotient>();
    if (!q) throw InputError("real blow down needs a Z2 quotient");
    if (q->sphere_dim != 2 * center.fiber_l) throw InputError("blow-down fiber rank mismatch");
    if (center.dim != dim(*q->inner) - 1) throw InputError("real blow-down center must have codim 1 in the fiber");
  }
  if (center.dim < 0) throw InputError("negative blow-down center dimension");
  return ManifoldExpr(
      node::BlowDown{std::make_shared<const ManifoldExpr>(std::move(bundle)), std::move(center)});
}

int dim(const ManifoldExpr& e) {
  return std::visit(
      overloaded{
          [](const node::Point&) { return 0; },
          [](const node::EvenSphere& s) { return s.dim; },
          [](const node::ComplexProjective& c) { return 2 * c.l; },
          [](const node::Product& p) {
            int d = 0;
            for (const auto& c : p.children) d += dim(c);
            return d;
          },
          [](const node::ConnSumFamily& c) { return dim(*c.summand); },
          [](const node::Z2Quotient& q) { return q.sphere_dim + dim(*q.inner); },
          [](const node::ProjBundleSU& b) { return 2 * b.l + dim(*b.fiber); },
          [](const node::RP2lBundle& b) { return 2 * b.l + dim(*b.base); },
          [](const node::BlowDown& b) { return dim(*b.bundle); },
      },
      e.node());
}

Affine euler(const ManifoldExpr& e) {
  return std::visit(
      overloaded{
          [](const node::Point&) { return Affine{1, 0}; },
          [](const node::EvenSphere&) { return Affine{2, 0}; },
          [](const node::ComplexProjective& c) { return Affine{c.l + 1, 0}; },
          [](const node::Product& p) {
            Affine x{1, 0};
            for (const auto& c : p.children) x = mul(x, euler(c));
            return x;
          },
          [](const node::ConnSumFamily& c) {
            // k summands glued along k-1 spheres: k*chi - 2(k-1)
            Affine s = euler(*c.summand);
            if (!s.is_constant()) throw UnsupportedError("connected sum of a family");
            Affine fam{2, s.constant - 2};
            if (c.k) return Affine{fam.at(*c.k), 0};
            return fam;
          },
          // the sphere factor is free, so chi halves against chi(S^2l) = 2
          [](const node::Z2Quotient& q) { return euler(*q.inner); },
          [](const node::ProjBundleSU& b) { return mul(Affine{b.l + 1, 0}, euler(*b.fiber)); },
          [](const node::RP2lBundle& b) { return euler(*b.base); },
          [](const node::BlowDown& b) {
            Affine x = euler(*b.bundle);
            // complex: a CP^l-bundle over the center collapses onto it
            if (b.center.kind == node::BlowKind::Complex) x.constant -= b.center.fiber_l * b.center.euler;
            return x;
          },
      },
      e.node());
}

bool orientable(const ManifoldExpr& e) {
  return std::visit(
      overloaded{
          [](const node::Product& p) {
            return std::all_of(p.children.begin(), p.children.end(),
                               [](const ManifoldExpr& c) { return orientable(c); });
          },
          [](const node::ConnSumFamily& c) { return orientable(*c.summand); },
          [](const node::Z2Quotient& q) { return orientable(*q.inner); },
          [](const node::ProjBundleSU& b) { return orientable(*b.fiber); },
          [](const node::RP2lBundle&) { return false; },
          [](const node::BlowDown& b) { return orientable(*b.bundle); },
          [](const auto&) { return true; },
      },
      e.node());
}

Tri simply_connected(const ManifoldExpr& e) {
  return std::visit(
      overloaded{
          [](const node::Product& p) {
            Tri out = Tri::Yes;
            for (const auto& c : p.children) {
              Tri t = simply_connected(c);
              if (t == Tri::No) return Tri::No;
              if (t == Tri::Unknown) out = Tri::Unknown;
            }
            return out;
          },
          [](const node::ConnSumFamily& c) {
            return simply_connected(*c.summand) == Tri::Yes ? Tri::Yes : Tri::Unknown;
          },
          [](const node::Z2Quotient& q) {
            return simply_connected(*q.inner) == Tri::Yes ? Tri::No : Tri::Unknown;
          },
          [](const node::ProjBundleSU& b) { return simply_connected(*b.fiber); },
          [](const node::RP2lBundle&) { return Tri::No; },
          [](const node::BlowDown& b) {
            if (b.center.kind == node::BlowKind::Complex) return simply_connected(*b.bundle);
            const auto& q = std::get<node::Z2Quotient>(b.bundle->node());
            // collapsing the RP^{2l} over a nonempty center kills the Z2
            if (b.center.source.is_empty()) return simply_connected(*b.bundle);
            return simply_connected(*q.inner) == Tri::Yes ? Tri::Yes : Tri::Unknown;
          },
          [](const auto&) { return Tri::Yes; },
      },
      e.node());
}

bool reverses_orientation(const ManifoldExpr& e, const Z2ActionTag& action) {
  using K = Z2ActionTag::Kind;
  if (action.kind == K::Trivial) return false;
  return std::visit(
      overloaded{
          [&](const node::EvenSphere&) {
            if (action.kind == K::Product) throw InputError("product Z2 tag on a sphere");
            // antipodal map and reflection both have degree -1 on an even sphere
            return true;
          },
          [&](const node::Product& p) {
            if (action.kind != K::Product || action.children.size() != p.children.size()) {
              throw InputError("Z2 tag does not match the product structure");
            }
            bool rev = false;
            for (std::size_t i = 0; i < p.children.size(); ++i) {
              rev ^= reverses_orientation(p.children[i], action.children[i]);
            }
            return rev;
          },
          [&](const node::Z2Quotient& q) { return reverses_orientation(*q.inner, action); },
          [&](const node::ProjBundleSU& b) { return reverses_orientation(*b.fiber, action); },
          [&](const node::BlowDown& b) { return reverses_orientation(*b.bundle, action); },
          [&](const auto&) -> bool {
            if (action.is_trivial()) return false;
            throw InputError("no Z2 action of this kind on " + structural_name(e));
          },
      },
      e.node());
}

namespace {

enum class Mode { Structural, Canonical };

std::string name_of(const ManifoldExpr& e, Mode mode);

std::string tagged(const ManifoldExpr& e, const Z2ActionTag& action, Mode mode) {
  using K = Z2ActionTag::Kind;
  if (action.is_trivial()) return name_of(e, mode);
  if (const auto* s = e.as<node::EvenSphere>()) {
    if (action.kind == K::Antipodal) return pow_name("S", s->dim) + "_1";
    if (action.kind == K::Reflection) return pow_name("S", s->dim) + "_2";
  }
  if (const auto* p = e.as<node::Product>(); p && action.kind == K::Product &&
                                             action.children.size() == p->children.size()) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < p->children.size(); ++i) {
      std::string n = tagged(p->children[i], action.children[i], mode);
      if (n != "pt") parts.push_back(paren(n));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : " x ") + s;
    return out.empty() ? "pt" : out;
  }
  std::string tag = action.kind == K::Antipodal ? "1" : action.kind == K::Reflection ? "2" : "*";
  return paren(name_of(e, mode)) + "_" + tag;
}

void flatten(const ManifoldExpr& e, Mode mode, std::vector<std::string>& out) {
  if (const auto* p = e.as<node::Product>()) {
    for (const auto& c : p->children) flatten(c, mode, out);
    return;
  }
  std::string n = name_of(e, mode);
  if (n != "pt") out.push_back(paren(n));
}

// Fiber a projective bundle must have for the blow down to be a standard
// space: CP^m (or S^2 = CP^1) collapsed along a hyperplane, or S^2m along
// a codim-2 sphere pair. Returns the identified name or nothing.
std::optional<std::string> complex_rewrite(const node::ProjBundleSU& b, const node::Center& c) {
  const std::string fiber = name_of(*b.fiber, Mode::Canonical);
  const int fd = dim(*b.fiber);
  if (fd < 2 || c.dim != fd - 2) return std::nullopt;
  const int m = fd / 2;
  const bool is_cp = fiber == pow_name("CP", m) || (m == 1 && fiber == "S^2");
  if (is_cp && c.euler == m) return pow_name("CP", b.l + m);
  if (fiber == pow_name("S", fd) && c.euler == 2) return pow_name("S", 2 * b.l + fd);
  return std::nullopt;
}

std::optional<std::string> real_rewrite(const node::Z2Quotient& q, const node::Center& c) {
  const auto* s = q.inner->as<node::EvenSphere>();
  if (!s || q.inner_action.kind != Z2ActionTag::Kind::Reflection) return std::nullopt;
  if (c.dim != s->dim - 1) return std::nullopt;
  return pow_name("S", q.sphere_dim + s->dim);
}

std::string name_of(const ManifoldExpr& e, Mode mode) {
  return std::visit(
      overloaded{
          [](const node::Point&) { return std::string("pt"); },
          [](const node::EvenSphere& s) { return pow_name("S", s.dim); },
          [](const node::ComplexProjective& c) { return pow_name("CP", c.l); },
          [&](const node::Product& p) {
            std::vector<std::string> parts;
            for (const auto& c : p.children) flatten(c, mode, parts);
            std::sort(parts.begin(), parts.end());
            std::string out;
            for (const auto& s : parts) out += (out.empty() ? "" : " x ") + s;
            return out.empty() ? std::string("pt") : out;
          },
          [&](const node::ConnSumFamily& c) {
            std::string s = name_of(*c.summand, mode);
            if (c.k && *c.k == 0) return pow_name("S", dim(*c.summand));
            if (c.k && *c.k == 1) return s;
            std::string k = c.k ? std::to_string(*c.k) : std::string("k");
            return "#_" + k + "(" + s + ")";
          },
          [&](const node::Z2Quotient& q) {
            return pow_name("S", q.sphere_dim) + "_1 x_{Z2} " + paren(tagged(*q.inner, q.inner_action, mode));
          },
          [&](const node::ProjBundleSU& b) {
            std::string f = name_of(*b.fiber, mode);
            if (f == "pt") return pow_name("CP", b.l);
            return paren(f) + "-bundle over " + pow_name("CP", b.l);
          },
          [&](const node::RP2lBundle& b) {
            return pow_name("RP", 2 * b.l) + "-bundle over " + paren(name_of(*b.base, mode));
          },
          [&](const node::BlowDown& b) {
            if (mode == Mode::Canonical) {
              std::optional<std::string> r;
              if (const auto* pb = b.bundle->as<node::ProjBundleSU>()) r = complex_rewrite(*pb, b.center);
              if (const auto* q = b.bundle->as<node::Z2Quotient>()) r = real_rewrite(*q, b.center);
              if (r) return *r;
            }
            std::ostringstream os;
            os << "blowdown(" << name_of(*b.bundle, mode) << "; dim " << b.center.dim << ", chi "
               << b.center.euler << ")";
            return os.str();
          },
      },
      e.node());
}

}  // namespace

std::string canonical_name(const ManifoldExpr& e) { return name_of(e, Mode::Canonical); }

std::string structural_name(const ManifoldExpr& e) { return name_of(e, Mode::Structural); }

std::string tagged_name(const ManifoldExpr& e, const Z2ActionTag& action) {
  return tagged(e, action, Mode::Canonical);
}

}  // namespace torus
