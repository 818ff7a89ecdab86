#pragma once

#include "qdtm/pwl.hpp"
#include "qdtm/quasi_integral.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/validation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdtm {

/// Structured random inputs for the axiom patterns exercised by classify.
enum class CaseKind {
  DominatedPair,        // 0 <= g <= f
  DisjointSupportPair,  // f, g >= 0 with disjoint supports
  PosNegOrthogonal,     // f >= 0, g <= 0, f g = 0
  ConePair,             // f with two same-direction profiles and a, b >= 0
  ConstantShift,        // compact space: f and a constant
  LevelC,               // f <= c, f = c on supp g, g >= 0
};

struct CasePack {
  std::vector<PwlFunction> functions;
  std::vector<MonotoneProfile> profiles;
  std::vector<Rational> scalars;
};

/// Structurally valid random inputs for the requested pattern (verified by
/// construction before use).
CasePack generate_case(CaseKind kind, const Space& space, std::uint64_t seed);

enum class Verdict { Pass, Fail };

struct ClassVerdict {
  Verdict verdict = Verdict::Pass;
  int cases = 0;
  std::optional<nlohmann::json> witness;  // first counterexample, replayable
  std::vector<std::string> skipped_clauses;  // compact-only clauses on the line
};

/// Verdicts for the functional taxonomy, plus consistency of the implication
/// lattice: linear => quasi_linear => s => {r, l, c}; r => c => d;
/// p_conic => r; n_conic => l. A Pass upstream with a Fail downstream sets
/// hierarchy_consistent = false.
struct ClassificationReport {
  std::map<std::string, ClassVerdict> verdicts;
  bool hierarchy_consistent = true;
  std::optional<Rational> norm;  // nullopt = unknown

  const ClassVerdict& at(const std::string& cls) const { return verdicts.at(cls); }
};

/// Falsification-based placement of rho in the taxonomy: each class is
/// checked on `budget` structurally valid random cases with exact equality;
/// Pass only means "no counterexample within budget".
ClassificationReport classify(const FunctionalHandle& rho, int budget,
                              std::uint64_t seed);

/// Additivity of rho across phi o f, psi o f for random profiles that need
/// not be monotone; strictly stronger than the cone test.
CheckReport quasi_linearity_check(const FunctionalHandle& rho, const PwlFunction& f,
                                  int budget, std::uint64_t seed);

}  // namespace qdtm
