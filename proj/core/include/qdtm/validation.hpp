#pragma once

#include "qdtm/interval_set.hpp"
#include "qdtm/measure.hpp"
#include "qdtm/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qdtm {

/// Outcome of a randomized check battery: either every case passed or the
/// first witness is recorded. Failure is data, not an exception.
struct ValidationReport {
  int cases = 0;
  std::optional<nlohmann::json> witness;

  bool passed() const { return !witness.has_value(); }
};

/// Result of one named identity/inequality sweep.
struct CheckReport {
  std::string name;
  int cases = 0;
  std::vector<nlohmann::json> failures;

  bool passed() const { return failures.empty(); }
};

using SetFunction = std::function<Rational(const IntervalSet&)>;

/// Randomized validation of the deficient-topological-measure axioms for an
/// arbitrary set function: additivity on disjoint compact pairs, inner and
/// outer regularity along monotone interval-set schedules, superadditivity,
/// monotonicity, and the empty set.
ValidationReport validate_set_function(const SetFunction& fn, const Space& space,
                                       int budget, std::uint64_t seed);

ValidationReport validate_dtm(const Dtm& mu, int budget, std::uint64_t seed);

/// Randomized search for a violation of nu(U) <= nu(K) + nu(U \ K) over
/// compact K inside open U; Pass means no counterexample within budget.
ValidationReport topological_measure_report(const SetFunction& fn, const Space& space,
                                            int budget, std::uint64_t seed);

ValidationReport is_topological_measure(const Dtm& mu, int budget, std::uint64_t seed);

/// Limit of exact samples (parameter, value) taken along a decreasing
/// parameter schedule: the value once two consecutive samples agree, else the
/// affine extrapolation to parameter 0 from the last three samples (the third
/// sample must confirm the fit). nullopt when neither pattern holds.
std::optional<Rational> schedule_limit(
    const std::vector<std::pair<Rational, Rational>>& samples);

}  // namespace qdtm
