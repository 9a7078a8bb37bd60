#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcat/catalog.hpp"
#include "gcat/colimits.hpp"

namespace gcat {

struct CaseResult {
  std::string id;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int requested = 0;
  std::vector<CaseResult> cases;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  std::string to_json() const;  // deterministic: sorted fields, no timing
};

// Suites: pushout-explicit, pushout-fixed, filtered-mono, tensor-fixed,
// adjunction, dwyer-cells, closure, homology-cells. `cases` scales the
// per-parameter instance count for the seeded suites and caps the catalog
// suites; 0 runs an empty (vacuously passing) suite, -1 the default size.
// Throws Error("UnknownSuite") for anything else.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cases, int jobs = 1,
                      std::int64_t budget = 2'000'000);

std::vector<std::string> suite_names();

// Nerve compatibility checks used by the acceptance suite: c(N(C)) ≅ C on
// acyclic catalog categories and N(X^H) = (N X)^H on all catalog actions.
SuiteReport nerve_compat_suite(std::uint64_t seed, int cases, int jobs = 1);

// One closure step: given Q = Y ⊔_{X0} Xn for a composite of cell pushouts
// X0 -> Xn (or a retract of one), check that the H-fixed square is again a
// pushout by comparing against the presented oracle of the fixed legs,
// including cocone compatibility. `q` must come from gcat_pushout_oracle so
// that its class lookup is available.
CaseResult verify_preservation_closure(const GPushout& q, const GFunctor& incl, const GFunctor& u,
                                       const Subgroup& h, std::int64_t budget = 2'000'000);

}  // namespace gcat
