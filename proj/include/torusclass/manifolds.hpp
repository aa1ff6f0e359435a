#pragma once

// Symbolic closed-manifold expressions and their invariant evaluators.
//
// Expressions are immutable trees shared by pointer. Construction validates
// the structural invariants (even dimensions, orientable Z2 quotients, blow
// down centers of the right codimension), so every evaluator can assume a
// well-formed tree.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torusclass/liegroups.hpp"
#include "torusclass/locus.hpp"

namespace torus {

/// A Z2 action on an expression, aligned with its product structure:
/// Product nodes carry one child tag per factor; bundle-type nodes pass the
/// tag through to their fiber.
struct Z2ActionTag {
  enum class Kind { Trivial, Antipodal, Reflection, Product };
  Kind kind = Kind::Trivial;
  std::vector<Z2ActionTag> children;

  static Z2ActionTag trivial() { return {}; }
  static Z2ActionTag antipodal() { return {Kind::Antipodal, {}}; }
  static Z2ActionTag reflection() { return {Kind::Reflection, {}}; }
  static Z2ActionTag product(std::vector<Z2ActionTag> parts) {
    return {Kind::Product, std::move(parts)};
  }
  static Z2ActionTag from(Z2Tag t);

  bool is_trivial() const;

  friend bool operator==(const Z2ActionTag&, const Z2ActionTag&) = default;
};

/// Value of an Euler characteristic that may depend on a family parameter k.
struct Affine {
  std::int64_t constant = 0;
  std::int64_t k_coeff = 0;

  bool is_constant() const { return k_coeff == 0; }
  std::int64_t at(std::int64_t k) const { return constant + k_coeff * k; }
  std::string to_string() const;

  friend bool operator==(const Affine&, const Affine&) = default;
};

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

class ManifoldExpr;

namespace node {

struct Point {};
struct EvenSphere {
  int dim;
};
struct ComplexProjective {
  int l;
};
struct Product {
  std::vector<ManifoldExpr> children;
};
/// #_k summand; k = 0 is the sphere of the summand's dimension. A missing k is
/// the symbolic family.
struct ConnSumFamily {
  std::shared_ptr<const ManifoldExpr> summand;
  std::optional<int> k;
};
/// S^sphere_dim x_{Z2} inner, Z2 antipodal on the sphere and inner_action on inner.
struct Z2Quotient {
  int sphere_dim;
  std::shared_ptr<const ManifoldExpr> inner;
  Z2ActionTag inner_action;
};
/// SU(l+1) x im(psi) x_{S(U(l)xU(1)) x im(psi)} fiber: a fiber-bundle over CP^l.
struct ProjBundleSU {
  int l;
  std::shared_ptr<const ManifoldExpr> fiber;
  Weights psi;
};
/// Bundle over `base` with fiber RP^{2l}.
struct RP2lBundle {
  int l;
  std::shared_ptr<const ManifoldExpr> base;
};

enum class BlowKind { Complex, Real };

/// The locus a blow down collapses onto, with the invariants the
/// evaluators need. `source` is the catalog locus it was saturated from.
struct Center {
  Locus source;
  int dim = 0;
  std::int64_t euler = 0;
  BlowKind kind = BlowKind::Complex;
  /// l of the exceptional fiber CP^l (complex) or RP^{2l} (real).
  int fiber_l = 1;
};

struct BlowDown {
  std::shared_ptr<const ManifoldExpr> bundle;
  Center center;
};

}  // namespace node

class ManifoldExpr {
public:
  using Node = std::variant<node::Point, node::EvenSphere, node::ComplexProjective, node::Product,
                            node::ConnSumFamily, node::Z2Quotient, node::ProjBundleSU,
                            node::RP2lBundle, node::BlowDown>;

  static ManifoldExpr point();
  static ManifoldExpr sphere(int dim);
  static ManifoldExpr cp(int l);
  static ManifoldExpr product(std::vector<ManifoldExpr> children);
  static ManifoldExpr conn_sum(ManifoldExpr summand, std::optional<int> k);
  /// Throws InputError unless `action` reverses the orientation of `inner`.
  static ManifoldExpr z2_quotient(int sphere_dim, ManifoldExpr inner, Z2ActionTag action);
  static ManifoldExpr proj_bundle_su(int l, ManifoldExpr fiber, Weights psi);
  static ManifoldExpr rp_bundle(int l, ManifoldExpr base);
  /// `bundle` must be a ProjBundleSU (complex) or Z2Quotient (real) node whose
  /// fiber data matches the center.
  static ManifoldExpr blow_down(ManifoldExpr bundle, node::Center center);

  const Node& node() const { return *node_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }

private:
  explicit ManifoldExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

int dim(const ManifoldExpr& e);
Affine euler(const ManifoldExpr& e);
bool orientable(const ManifoldExpr& e);
Tri simply_connected(const ManifoldExpr& e);

/// Whether `action` reverses the orientation of `e`. Throws InputError if the
/// tag does not fit the expression's product structure.
bool reverses_orientation(const ManifoldExpr& e, const Z2ActionTag& action);

/// Canonical ASCII name, applying the known identifications (blow downs of
/// projective bundles over CP^m or S^2m to CP^{l+m} / S^{2l+2m}, the real blow
/// down of S^2l_1 x_{Z2} S^2m_2 along the fixed equator to S^{2l+2m}); other
/// nodes get a structural name with sorted product factors.
std::string canonical_name(const ManifoldExpr& e);

/// The name of `e` carrying the Z2 action `action` (S^2_1, S^2_2, ...).
std::string tagged_name(const ManifoldExpr& e, const Z2ActionTag& action);

/// Structural rendering without identifications.
std::string structural_name(const ManifoldExpr& e);

}  // namespace torus
