#include "torusclass/liegroups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "torusclass/error.hpp"

namespace torus {

namespace {

// Isomorphism classes the fact tables distinguish.
enum class IsoType { A1, Spin4, B2, A3, SUgen, SpinOdd, SpinEven, SpGen };

struct Classified {
  IsoType type;
  int ell;
};

Classified classify_iso(const GroupFactor& f) {
  switch (f.kind) {
    case FactorKind::Torus:
      throw InputError("fact tables are defined for non-torus factors only");
    case FactorKind::SU:
      if (f.n < 2) throw InputError("SU(n) needs n >= 2, got " + to_string(f));
      if (f.n == 2) return {IsoType::A1, 1};
      if (f.n == 4) return {IsoType::A3, 3};
      return {IsoType::SUgen, f.n - 1};
    case FactorKind::SO:
    case FactorKind::Spin:
      if (f.n < 3) throw InputError(to_string(f) + " is not semisimple");
      if (f.n == 3) return {IsoType::A1, 1};
      if (f.n == 4) return {IsoType::Spin4, 2};
      if (f.n == 5) return {IsoType::B2, 2};
      if (f.n == 6) return {IsoType::A3, 3};
      if (f.n % 2 == 1) return {IsoType::SpinOdd, (f.n - 1) / 2};
      return {IsoType::SpinEven, f.n / 2};
    case FactorKind::Sp:
      if (f.n < 1) throw InputError("Sp(n) needs n >= 1");
      if (f.n == 1) return {IsoType::A1, 1};
      if (f.n == 2) return {IsoType::B2, 2};
      return {IsoType::SpGen, f.n};
  }
  throw InputError("unknown factor kind");
}

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::SU: return "SU";
    case FactorKind::SO: return "SO";
    case FactorKind::Spin: return "Spin";
    case FactorKind::Sp: return "Sp";
    case FactorKind::Torus: return "T";
  }
  return "?";
}

[[noreturn]] void parse_fail(std::size_t col, const std::string& what) {
  throw InputError("group spec parse error at column " + std::to_string(col + 1) + ": " +
                   what);
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    skip_ws();
    if (at_end()) parse_fail(pos_, "empty spec");
    while (true) {
      skip_ws();
      if (peek() == 'T') {
        spec.l0 = parse_torus();
        skip_ws();
        if (!at_end()) parse_fail(pos_, "the torus T^k must be the last factor");
        break;
      }
      spec.factors.push_back(parse_factor());
      skip_ws();
      if (at_end()) break;
      if (peek() != 'x') parse_fail(pos_, "expected 'x' between factors");
      ++pos_;
    }
    return spec;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) parse_fail(start, "expected an integer");
    if (pos_ - start > 6) parse_fail(start, "integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) parse_fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  int parse_torus() {
    expect('T');
    expect('^');
    return parse_int();
  }

  GroupFactor parse_factor() {
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    GroupFactor f;
    if (name == "SU") {
      f.kind = FactorKind::SU;
    } else if (name == "SO") {
      f.kind = FactorKind::SO;
    } else if (name == "Spin") {
      f.kind = FactorKind::Spin;
    } else if (name == "Sp") {
      f.kind = FactorKind::Sp;
    } else if (name.empty()) {
      parse_fail(start, "expected a factor name");
    } else {
      parse_fail(start, "unsupported factor '" + name +
                            "' (only SU, SO, Spin, Sp and a trailing T^k; exceptional "
                            "groups never occur as elementary factors)");
    }
    expect('(');
    f.n = parse_int();
    expect(')');
    if (peek() == '#') {
      ++pos_;
      f.f_count = parse_int();
    }
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

int GroupFactor::rank() const {
  switch (kind) {
    case FactorKind::SU: return n - 1;
    case FactorKind::SO:
    case FactorKind::Spin: return n / 2;
    case FactorKind::Sp:
    case FactorKind::Torus: return n;
  }
  return 0;
}

int GroupFactor::ell() const { return kind == FactorKind::Torus ? n : rank(); }

int GroupSpec::rank() const {
  int r = l0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

int GroupSpec::su_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                        [](const GroupFactor& f) { return f.is_su(); }));
}

int GroupSpec::so_odd_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                        [](const GroupFactor& f) { return f.is_so_odd(); }));
}

int GroupSpec::so_even_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                        [](const GroupFactor& f) { return f.is_so_even(); }));
}

std::string to_string(const GroupFactor& f) {
  std::ostringstream os;
  if (f.kind == FactorKind::Torus) {
    os << "T^" << f.n;
  } else {
    os << kind_name(f.kind) << '(' << f.n << ')';
  }
  if (f.f_count) os << '#' << *f.f_count;
  return os.str();
}

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (const auto& f : spec.factors) {
    if (!out.empty()) out += 'x';
    out += to_string(f);
  }
  if (spec.l0 > 0 || spec.factors.empty()) {
    if (!out.empty()) out += 'x';
    out += "T^" + std::to_string(spec.l0);
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::set<int> possible_F_sizes(const GroupFactor& factor) {
  auto [type, l] = classify_iso(factor);
  switch (type) {
    case IsoType::A1: return {1, 2};
    case IsoType::Spin4: return {2};
    case IsoType::B2: return {2};
    case IsoType::A3: return {3, 4};
    case IsoType::SUgen: return {l + 1};
    case IsoType::SpinOdd:
    case IsoType::SpinEven:
    case IsoType::SpGen: return {l};
  }
  return {};
}

RepDims min_rep_dims(const GroupFactor& factor) {
  auto [type, l] = classify_iso(factor);
  switch (type) {
    case IsoType::A1: return {3, 2};
    case IsoType::Spin4: return {3, 2};
    case IsoType::B2: return {5, 4};
    case IsoType::A3: return {6, 4};
    case IsoType::SUgen: return {2 * l + 2, l + 1};
    case IsoType::SpinOdd: return {2 * l + 1, 2 * l + 1};
    case IsoType::SpinEven: return {2 * l, 2 * l};
    case IsoType::SpGen: return {2 * l + 1, 2 * l};
  }
  return {};
}

MaxRankSubgroup max_rank_subgroup(const GroupFactor& factor) {
  auto [type, l] = classify_iso(factor);
  auto s = [](int v) { return std::to_string(v); };
  switch (type) {
    case IsoType::A1: return {"S(U(1)xU(1))", 2};
    case IsoType::Spin4:
      throw InputError("Spin(4) has no single maximal-rank subgroup of maximal dimension");
    case IsoType::B2: return {"Spin(4)", 4};
    case IsoType::A3: return {"S(U(3)xU(1))", 6};
    case IsoType::SUgen: return {"S(U(" + s(l) + ")xU(1))", 2 * l};
    case IsoType::SpinOdd: return {"Spin(" + s(2 * l) + ")", 2 * l};
    case IsoType::SpinEven: return {"Spin(" + s(2 * l - 2) + ")xSpin(2)", 4 * l - 4};
    case IsoType::SpGen: return {"Sp(" + s(l - 1) + ")xSp(1)", 4 * l - 4};
  }
  return {};
}

GroupSpec normalize_spec(const GroupSpec& spec, NormalizeOptions opts) {
  if (spec.l0 < 0) throw InputError("torus rank must be non-negative");
  std::vector<GroupFactor> su, so_odd, so_even;
  int l0 = spec.l0;

  auto check_flag = [](const GroupFactor& f, std::initializer_list<int> allowed) {
    if (!f.f_count) return;
    if (std::find(allowed.begin(), allowed.end(), *f.f_count) == allowed.end()) {
      throw InputError("#F = " + std::to_string(*f.f_count) + " is not possible for " +
                       to_string(GroupFactor{f.kind, f.n, std::nullopt}));
    }
  };

  for (const auto& f : spec.factors) {
    switch (f.kind) {
      case FactorKind::Torus:
        l0 += f.n;
        break;
      case FactorKind::SU:
        if (f.n < 2) throw InputError("SU(n) needs n >= 2");
        if (f.n == 2) {
          check_flag(f, {1, 2});
          if (f.f_count == 1) {
            so_odd.push_back(GroupFactor::so(3));
          } else {
            su.push_back(GroupFactor::su(2));
          }
        } else if (f.n == 4) {
          check_flag(f, {3, 4});
          if (f.f_count == 3) {
            so_even.push_back(GroupFactor::so(6));
          } else {
            su.push_back(GroupFactor::su(4));
          }
        } else {
          check_flag(f, {f.n});
          su.push_back(GroupFactor::su(f.n));
        }
        break;
      case FactorKind::Sp:
        if (f.n < 1) throw InputError("Sp(n) needs n >= 1");
        if (f.n == 1) {
          check_flag(f, {1, 2});
          if (f.f_count == 1) {
            so_odd.push_back(GroupFactor::so(3));
          } else {
            su.push_back(GroupFactor::su(2));
          }
        } else if (f.n == 2) {
          check_flag(f, {2});
          so_odd.push_back(GroupFactor::so(5));
        } else {
          throw InputError(to_string(f) +
                           " cannot be an elementary factor: no torus manifold admits an "
                           "elementary Sp(l) factor for l > 2 (maximal-rank subgroup and "
                           "representation-dimension bounds exclude it)");
        }
        break;
      case FactorKind::SO:
      case FactorKind::Spin: {
        if (f.n < 3) {
          throw InputError(to_string(f) + " is abelian or trivial; write it as part of T^k");
        }
        if (f.n == 3) {
          check_flag(f, {1, 2});
          // Spin(3)#2 is SU(2) acting with #F = 2; SO(3) keeps both values.
          if (f.kind == FactorKind::Spin && f.f_count == 2) {
            su.push_back(GroupFactor::su(2));
          } else {
            so_odd.push_back(GroupFactor::so(3));
          }
        } else if (f.n == 6) {
          check_flag(f, {3, 4});
          if (f.f_count == 4) {
            su.push_back(GroupFactor::su(4));
          } else {
            so_even.push_back(GroupFactor::so(6));
          }
        } else {
          check_flag(f, {f.n / 2});
          if (f.n % 2 == 1) {
            so_odd.push_back(GroupFactor::so(f.n));
          } else {
            so_even.push_back(GroupFactor::so(f.n));
          }
        }
        break;
      }
    }
  }

  if (opts.reduce_so_even) {
    for (const auto& f : so_even) {
      su.push_back(GroupFactor::su(f.n / 2));
      ++l0;
    }
    so_even.clear();
  }

  GroupSpec out;
  out.l0 = l0;
  out.factors = std::move(su);
  out.factors.insert(out.factors.end(), so_odd.begin(), so_odd.end());
  out.factors.insert(out.factors.end(), so_even.begin(), so_even.end());
  return out;
}

int orbit_space_dim(const GroupSpec& spec) {
  int torus = spec.l0;
  for (const auto& f : spec.factors) {
    if (f.kind == FactorKind::Torus) torus += f.n;
  }
  return torus + spec.so_even_count();
}

bool psi_kernel_is_su(const Weights& w) {
  std::int64_t g = 0;
  for (auto v : w) g = std::gcd(g, v < 0 ? -v : v);
  return g == 1;
}

}  // namespace torus
