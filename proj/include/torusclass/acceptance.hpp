#pragma once

// Built-in acceptance suite, shared by `torusclass check` and the acceptance
// test binary, plus the independent oracles it relies on.

#include <optional>
#include <string>
#include <vector>

#include "torusclass/fivetuples.hpp"

namespace torus::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> run_all();
CriterionResult run_one(int id);
inline constexpr int kCriteria = 10;

/// "[PASS] 5. Classification tables (0.41 s): ..." style line.
std::string format(const CriterionResult& r);

/// Admissibility written directly from the definition on the unfolded
/// tuple, sharing no code with validate().
bool reference_admissible(const FiveTuple& t);

/// Dimension and Euler characteristic read off a canonical name built from
/// spheres, projective spaces, products and connected sums.
struct NameInvariants {
  int dim = 0;
  long chi = 0;
};
std::optional<NameInvariants> invariants_from_name(const std::string& name);

/// Representative valid tuples over several specs, used by the mutation
/// and round-trip checks.
std::vector<FiveTuple> tuple_pool();

/// Specs of rank <= 4 inside the catalog (l0 <= 2), in spec grammar.
std::vector<std::string> small_specs();

}  // namespace torus::acceptance
