// torusclass: classify torus manifolds with a given non-abelian symmetry.
//
//   torusclass classify SU(2)xT^1 [--json] [--psi-bound N] [--reduce-so-even]
//   torusclass classify SO(4)xSO(4) --family
//   torusclass tables --paper
//   torusclass check
//
// Exit codes: 0 ok, 1 classification error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "torusclass/acceptance.hpp"
#include "torusclass/classify.hpp"
#include "torusclass/error.hpp"
#include "torusclass/tables.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace torus;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

json row_json(const ClassRow& r) {
  const FiveTuple& t = r.tuple;
  json j;
  j["spec"] = to_string(t.spec);
  j["psi"] = t.psi;
  j["base"] = t.base.to_string();
  j["A"] = json::array();
  for (const auto& l : t.A) j["A"].push_back(l.to_string());
  j["B"] = json::array();
  for (const auto& l : t.B) j["B"].push_back(l.to_string());
  j["a"] = t.a;
  j["name"] = r.name;
  j["chi"] = r.chi.to_string();
  j["dim"] = r.dim;
  j["orbit_space_dim"] = r.orbit_space_dim;
  j["quasitoric"] = r.flags.quasitoric;
  j["simply_connected"] = to_string(r.flags.simply_connected);
  j["verified"] = r.verified;
  return j;
}

json classification_json(const Classification& c) {
  json j;
  j["input"] = to_string(c.input);
  j["normalized"] = to_string(c.normalized);
  j["rows"] = json::array();
  for (const auto& r : c.rows) j["rows"].push_back(row_json(r));
  return j;
}

json family_json(const FamilyAnswer& f) {
  json j;
  j["spec"] = to_string(f.spec);
  j["family"] = canonical_name(f.family);
  j["family_chi"] = f.chi.to_string();
  j["family_range"] = "k >= 1";
  j["sphere"] = canonical_name(f.sphere);
  j["sphere_chi"] = euler(f.sphere).to_string();
  return j;
}

// TORUS_PSI_BOUND replaces the built-in default; an explicit flag wins.
int default_psi_bound() {
  const char* env = std::getenv("TORUS_PSI_BOUND");
  if (!env || !*env) return kDefaultPsiBound;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("TORUS_PSI_BOUND must be a non-negative integer, got '") + env + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of torus manifolds with non-abelian symmetry"};
  app.require_subcommand(1);

  auto* cls = app.add_subcommand("classify", "Classify torus manifolds for one covering group");
  std::string spec_text;
  bool as_json = false, family = false, reduce_so_even = false;
  int psi_bound = -1;
  cls->add_option("spec", spec_text, "Group spec, e.g. SU(2)xSO(3)xT^1")->required();
  cls->add_flag("--json", as_json, "Machine-readable output");
  cls->add_flag("--family", family, "Family answer for SO(2l1)xT^1 and SO(2l1)xSO(2l2)");
  cls->add_flag("--reduce-so-even", reduce_so_even, "Trade each SO(2l) for SU(l) x S^1");
  cls->add_option("--psi-bound", psi_bound, "Bound on the entries of the weight vectors")->check(CLI::NonNegativeNumber);

  auto* tables = app.add_subcommand("tables", "Emit the reference tables");
  bool paper = false;
  tables->add_flag("--paper", paper, "All seven reference tables")->required();

  auto* check = app.add_subcommand("check", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*cls) {
      GroupSpec spec;
      try {
        spec = parse_group_spec(spec_text);
      } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
      }
      if (family) {
        FamilyAnswer f = family_answer(spec);
        if (as_json) {
          std::cout << family_json(f).dump(2) << '\n';
        } else {
          std::cout << render(f);
        }
        return kOk;
      }
      ClassifyOptions opts;
      opts.psi_bound = psi_bound >= 0 ? psi_bound : default_psi_bound();
      opts.reduce_so_even = reduce_so_even;
      Classification c = classify(spec, opts);
      if (as_json) {
        std::cout << classification_json(c).dump(2) << '\n';
      } else {
        std::cout << render(c);
      }
      return kOk;
    }
    if (*tables) {
      bool first = true;
      for (const auto& t : reference_tables()) {
        if (!first) std::cout << '\n';
        first = false;
        std::cout << t.text;
      }
      return kOk;
    }
    if (*check) {
      bool all = true;
      for (const auto& r : acceptance::run_all()) {
        std::cout << acceptance::format(r) << '\n';
        all = all && r.pass;
      }
      return all ? kOk : kFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
