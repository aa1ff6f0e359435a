#include "torusclass/locus.hpp"

#include <algorithm>
#include <set>

#include "torusclass/error.hpp"

namespace torus {

const char* to_string(Z2Tag t) {
  switch (t) {
    case Z2Tag::Trivial: return "T";
    case Z2Tag::Antipodal: return "A";
    case Z2Tag::Reflection: return "R";
  }
  return "?";
}

namespace {

char piece_char(Piece p) {
  switch (p) {
    case Piece::Whole: return 'W';
    case Piece::North: return 'N';
    case Piece::South: return 'S';
    case Piece::Equator: return 'E';
  }
  return '?';
}

Piece piece_image(Piece p, Z2Tag t) {
  if (t == Z2Tag::Trivial) return p;
  // both non-trivial involutions swap the poles and preserve the equator
  if (p == Piece::North) return Piece::South;
  if (p == Piece::South) return Piece::North;
  return p;
}

bool piece_pointwise_fixed(Piece p, Z2Tag t) {
  switch (t) {
    case Z2Tag::Trivial: return true;
    case Z2Tag::Antipodal: return false;
    case Z2Tag::Reflection: return p == Piece::Equator;
  }
  return false;
}

}  // namespace

int LocusComponent::dim() const {
  int d = 0;
  for (Piece p : pieces) {
    if (p == Piece::Whole) d += 2;
    if (p == Piece::Equator) d += 1;
  }
  return d;
}

int LocusComponent::codim() const { return 2 * static_cast<int>(pieces.size()) - dim(); }

std::int64_t LocusComponent::euler() const {
  std::int64_t e = 1;
  for (Piece p : pieces) {
    if (p == Piece::Whole) e *= 2;
    if (p == Piece::Equator) e = 0;
  }
  return e;
}

std::optional<LocusComponent> intersect(const LocusComponent& a, const LocusComponent& b) {
  if (a.pieces.size() != b.pieces.size()) throw InputError("locus factor count mismatch");
  LocusComponent out;
  out.pieces.reserve(a.pieces.size());
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    Piece x = a.pieces[i], y = b.pieces[i];
    if (x == Piece::Whole) {
      out.pieces.push_back(y);
    } else if (y == Piece::Whole || x == y) {
      out.pieces.push_back(x);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Locus::Locus(std::vector<LocusComponent> components) : comps_(std::move(components)) {
  std::sort(comps_.begin(), comps_.end());
  comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
  for (const auto& c : comps_) {
    if (c.pieces.size() != comps_.front().pieces.size()) {
      throw InputError("locus components live on different bases");
    }
  }
}

Locus Locus::whole(int factors) {
  return Locus({LocusComponent{std::vector<Piece>(factors, Piece::Whole)}});
}

std::optional<int> Locus::codim() const {
  if (comps_.empty()) return std::nullopt;
  int c = comps_.front().codim();
  for (const auto& x : comps_) {
    if (x.codim() != c) return std::nullopt;
  }
  return c;
}

bool Locus::is_submanifold() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    for (std::size_t j = i + 1; j < comps_.size(); ++j) {
      if (torus::intersect(comps_[i], comps_[j])) return false;
    }
  }
  return true;
}

std::int64_t Locus::euler() const {
  std::int64_t e = 0;
  for (const auto& c : comps_) e += c.euler();
  return e;
}

Locus Locus::intersect(const Locus& other) const {
  std::vector<LocusComponent> out;
  for (const auto& a : comps_) {
    for (const auto& b : other.comps_) {
      if (auto c = torus::intersect(a, b)) out.push_back(*c);
    }
  }
  return Locus(std::move(out));
}

bool Locus::shares_component(const Locus& other) const {
  for (const auto& a : comps_) {
    if (std::binary_search(other.comps_.begin(), other.comps_.end(), a)) return true;
  }
  return false;
}

Locus Locus::image(const std::vector<Z2Tag>& tags) const {
  std::vector<LocusComponent> out;
  for (auto c : comps_) {
    if (c.pieces.size() != tags.size()) throw InputError("Z2 action factor count mismatch");
    for (std::size_t i = 0; i < tags.size(); ++i) c.pieces[i] = piece_image(c.pieces[i], tags[i]);
    out.push_back(std::move(c));
  }
  return Locus(std::move(out));
}

Locus Locus::swap_poles(unsigned mask) const {
  std::vector<LocusComponent> out;
  for (auto c : comps_) {
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      if (mask & (1u << i)) c.pieces[i] = piece_image(c.pieces[i], Z2Tag::Reflection);
    }
    out.push_back(std::move(c));
  }
  return Locus(std::move(out));
}

bool Locus::pointwise_fixed_by(const std::vector<Z2Tag>& tags) const {
  for (const auto& c : comps_) {
    if (c.pieces.size() != tags.size()) throw InputError("Z2 action factor count mismatch");
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (!piece_pointwise_fixed(c.pieces[i], tags[i])) return false;
    }
  }
  return true;
}

bool Locus::fixed_by_circle(const Weights& w) const {
  for (const auto& c : comps_) {
    if (c.pieces.size() != w.size()) throw InputError("circle weight length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i) {
      bool pole = c.pieces[i] == Piece::North || c.pieces[i] == Piece::South;
      if (w[i] != 0 && !pole) return false;
    }
  }
  return true;
}

std::string Locus::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& c : comps_) {
    if (!first) out += ',';
    first = false;
    if (c.pieces.size() == 1) {
      out += piece_char(c.pieces[0]);
    } else {
      out += '(';
      for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        if (i) out += ',';
        out += piece_char(c.pieces[i]);
      }
      out += ')';
    }
  }
  return out + "}";
}

std::vector<Locus> loci_of_codim(int factors, int codim) {
  std::vector<LocusComponent> candidates;
  std::vector<Piece> cur(factors, Piece::Whole);
  // odometer over {W,N,S,E}^factors
  const int total = 1 << (2 * factors);
  for (int code = 0; code < total; ++code) {
    for (int i = 0; i < factors; ++i) cur[i] = static_cast<Piece>((code >> (2 * i)) & 3);
    LocusComponent c{cur};
    if (c.codim() == codim) candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<Locus> out;
  const std::size_t n = candidates.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<LocusComponent> comps;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) comps.push_back(candidates[i]);
    }
    Locus l(std::move(comps));
    if (l.is_submanifold()) out.push_back(std::move(l));
  }
  std::stable_sort(out.begin(), out.end(), [](const Locus& a, const Locus& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool CatalogBase::slot_nontrivial(int slot) const {
  const auto& tags = slot_tags.at(slot);
  return std::any_of(tags.begin(), tags.end(), [](Z2Tag t) { return t != Z2Tag::Trivial; });
}

bool CatalogBase::slot_reverses_orientation(int slot) const {
  const auto& tags = slot_tags.at(slot);
  auto flips = std::count_if(tags.begin(), tags.end(), [](Z2Tag t) { return t != Z2Tag::Trivial; });
  return flips % 2 == 1;
}

std::string CatalogBase::to_string() const {
  if (l0 == 0) return "pt";
  auto sphere_name = [&](int factor) {
    // a lone slot uses the short names S^2_1 (antipodal) and S^2_2 (reflection)
    if (slot_tags.size() == 1) {
      switch (slot_tags[0][factor]) {
        case Z2Tag::Trivial: return std::string("S^2");
        case Z2Tag::Antipodal: return std::string("S^2_1");
        case Z2Tag::Reflection: return std::string("S^2_2");
      }
    }
    std::string s = "S^2";
    if (!slot_tags.empty()) {
      s += '[';
      for (std::size_t k = 0; k < slot_tags.size(); ++k) {
        if (k) s += ';';
        s += torus::to_string(slot_tags[k][factor]);
      }
      s += ']';
    }
    return s;
  };
  std::string out;
  for (int f = 0; f < l0; ++f) {
    if (f) out += " x ";
    out += sphere_name(f);
  }
  return out;
}

}  // namespace torus
