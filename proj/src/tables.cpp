#include "torusclass/tables.hpp"

#include <algorithm>
#include <sstream>

#include "torusclass/classify.hpp"

namespace torus {

namespace {

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string join(const std::set<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::string f_sizes_table() {
  std::ostringstream os;
  os << "# possible #F per elementary factor\n";
  os << pad("factor", 10) << "  #F\n";
  for (const auto& f : table_factors(true)) os << pad(to_string(f), 10) << "  " << join(possible_F_sizes(f)) << '\n';
  return os.str();
}

std::string max_rank_table() {
  std::ostringstream os;
  os << "# connected maximal-rank subgroups of maximal dimension\n";
  os << pad("factor", 10) << "  " << pad("H", 20) << "  codim\n";
  for (const auto& f : table_factors(false)) {
    auto h = max_rank_subgroup(f);
    os << pad(to_string(f), 10) << "  " << pad(h.name, 20) << "  " << h.codim << '\n';
  }
  return os.str();
}

std::string rep_dims_table() {
  std::ostringstream os;
  os << "# lower bounds for non-trivial representation dimensions\n";
  os << pad("factor", 10) << "  d_R  d_C\n";
  for (const auto& f : table_factors(true)) {
    auto d = min_rep_dims(f);
    os << pad(to_string(f), 10) << "  " << pad(std::to_string(d.real), 3) << "  " << d.complex << '\n';
  }
  return os.str();
}

std::string codim_one_table() {
  std::ostringstream os;
  os << "# torus manifolds with a codimension-one orbit (every A_i, B_i nonempty)\n";
  for (const auto& s : codim_one_specs()) {
    Classification c = classify(parse_group_spec(s));
    for (const auto& r : c.rows) {
      auto nonempty = [](const Locus& l) { return !l.is_empty(); };
      if (!std::all_of(r.tuple.A.begin(), r.tuple.A.end(), nonempty) ||
          !std::all_of(r.tuple.B.begin(), r.tuple.B.end(), nonempty)) {
        continue;
      }
      os << pad(s, 16) << "  " << pad(r.name, 6) << "  " << serialize(r.tuple) << '\n';
    }
  }
  return os.str();
}

std::string render_specs(const char* title, const std::vector<std::string>& specs) {
  std::string out = std::string("# ") + title + "\n";
  for (const auto& s : specs) out += render(classify(parse_group_spec(s)));
  return out;
}

std::string families_table() {
  std::string out = "# simply connected answers with SO(2l) factors\n";
  for (const char* s : {"SO(4)xT^1", "SO(6)xT^1", "SO(4)xSO(4)", "SO(4)xSO(6)"}) {
    out += render(family_answer(parse_group_spec(s)));
  }
  return out;
}

}  // namespace

std::vector<GroupFactor> table_factors(bool include_spin4) {
  std::vector<GroupFactor> out = {GroupFactor::su(2)};
  if (include_spin4) out.push_back(GroupFactor::spin(4));
  for (auto f : {GroupFactor::spin(5), GroupFactor::su(4), GroupFactor::su(3), GroupFactor::su(5),
                 GroupFactor::su(6), GroupFactor::spin(7), GroupFactor::spin(9), GroupFactor::spin(8),
                 GroupFactor::spin(10), GroupFactor::sp(3), GroupFactor::sp(4)}) {
    out.push_back(f);
  }
  return out;
}

std::vector<std::string> codim_one_specs() {
  return {"T^1", "SU(2)xT^1", "SO(3)xT^1", "SU(2)xSU(2)xT^1", "SU(2)xSO(3)xT^1"};
}

std::vector<std::string> four_dim_specs() {
  return {"SU(3)", "SU(2)xSU(2)", "SU(2)xT^1", "SU(2)xSO(3)", "SO(3)xSO(3)", "SO(3)xT^1"};
}

std::vector<ReferenceTable> reference_tables() {
  return {
      {"f_sizes", f_sizes_table()},
      {"max_rank_subgroups", max_rank_table()},
      {"rep_dims", rep_dims_table()},
      {"codim_one_orbit", codim_one_table()},
      {"two_factor", render_specs("two elementary factors, l1 = 1, l2 = 2",
                                  {"SU(2)xSU(3)", "SU(2)xSO(5)", "SO(3)xSO(5)"})},
      {"so_even_families", families_table()},
      {"four_dim", render_specs("four-dimensional torus manifolds with non-abelian symmetry", four_dim_specs())},
  };
}

}  // namespace torus
