#pragma once

#include "qdtm/measure.hpp"
#include "qdtm/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdtm {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CriterionResult> items;

  bool passed() const {
    for (const auto& item : items)
      if (!item.passed) return false;
    return true;
  }
};

/// The standard line-space measure family: simple set functions, point
/// masses, interval Lebesgue pieces and conic mixtures of all three.
std::vector<Dtm> line_catalog();
/// The measure-type subfamily (every member is a topological measure).
std::vector<Dtm> line_measure_catalog();

/// Exact golden values of the two worked examples (simple measure with a
/// hat, and with a flat-top tent): distribution functions, boundary
/// measures, quasi-integrals and the r = l verdicts.
SuiteResult golden_suite();

/// Randomized exact-identity sweeps: oracle equivalence, the linear
/// baseline, cone and partition identities, duality and norms, the r = l
/// criterion, classification hierarchy witnesses, pushforward bounds, and
/// the Stieltjes integration-by-parts identity. `cases` scales the budgets
/// (500 reproduces the standard run).
SuiteResult properties_suite(std::uint64_t seed, int cases);

/// Representation round trip over the full catalog and `cases` random
/// open/compact sets per measure.
SuiteResult roundtrip_suite(std::uint64_t seed, int cases);

}  // namespace qdtm
