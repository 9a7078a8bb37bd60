// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds at its stated tolerance (exact isomorphism / equality everywhere,
// wall-clock bounds where stated).

#include <chrono>
#include <cstdio>
#include <string>

#include "gcat/verify.hpp"

using namespace gcat;

namespace {

int failures = 0;

struct Outcome {
  bool pass;
  std::string summary;
};

void report(int index, const std::string& name, const Outcome& o, double seconds, double bound) {
  bool in_time = bound <= 0 || seconds < bound;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%d/9] %s  %s: %s (%.1fs%s)\n", index, pass ? "PASS" : "FAIL", name.c_str(),
              o.summary.c_str(), seconds,
              bound > 0 ? (" / bound " + std::to_string(static_cast<int>(bound)) + "s").c_str() : "");
  std::fflush(stdout);
}

template <typename F>
void criterion(int index, const std::string& name, double bound, F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, o, dt, bound);
}

Outcome from_suite(const SuiteReport& rep, const std::string& what) {
  Outcome o;
  o.pass = rep.all_pass();
  o.summary = std::to_string(rep.passed()) + "/" + std::to_string(rep.cases.size()) + " " + what;
  if (!o.pass)
    for (const auto& c : rep.cases)
      if (!c.pass) {
        o.summary += "; first failure " + c.id + ": " + c.detail;
        break;
      }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 42;
  int jobs = 4;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string a = argv[i];
    if (a == "--seed") seed = std::stoull(argv[i + 1]);
    if (a == "--jobs") jobs = std::stoi(argv[i + 1]);
  }

  criterion(1, "explicit pushout matches the oracle on 50 seeded Dwyer maps", 60, [&] {
    return from_suite(run_suite("pushout-explicit", seed, 50, jobs), "isomorphic with compatible cocones");
  });

  criterion(2, "fixed points commute with tensored Dwyer pushouts (C2, C3, S3; all subgroup pairs)", 120,
            [&] { return from_suite(run_suite("pushout-fixed", seed, 20, jobs), "comparisons isomorphic"); });

  criterion(3, "fixed points commute with finite mono colimits of G-posets", 0, [&] {
    return from_suite(run_suite("filtered-mono", seed, 20, jobs), "colimits commute with every (-)^H");
  });

  criterion(4, "(G/K)^H tensor A compares isomorphically for all fixture groups", 0, [&] {
    return from_suite(run_suite("tensor-fixed", seed, 10, jobs), "canonical comparisons isomorphic");
  });

  criterion(5, "hom-set bijection and triangle identities over C2 and C3 (exhaustive catalog)", 0, [&] {
    return from_suite(run_suite("adjunction", seed, -1, jobs), "adjunction instances verified");
  });

  criterion(6, "generating cells are Dwyer maps of posets (m <= 2, both horn targets)", 0, [&] {
    return from_suite(run_suite("dwyer-cells", seed, -1, jobs), "cells verified with witnesses");
  });

  criterion(7, "homology pipeline: circle, sphere, acyclic cells, detected m=2 cofibration", 60, [&] {
    return from_suite(run_suite("homology-cells", seed, -1, jobs), "homology values exact");
  });

  criterion(8, "fixed points preserve composites of cell pushouts and a retract instance", 0, [&] {
    return from_suite(run_suite("closure", seed, 6, jobs), "fixed squares remain pushouts");
  });

  criterion(9, "nerve compatibilities: c(N(C)) iso C and N(X^H) = (N X)^H on the catalog", 0, [&] {
    return from_suite(nerve_compat_suite(seed, -1, jobs), "nerve comparisons exact");
  });

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
