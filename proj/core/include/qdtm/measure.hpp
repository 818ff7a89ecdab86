#pragma once

#include "qdtm/interval_set.hpp"
#include "qdtm/rational.hpp"
#include "qdtm/space.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qdtm {

/// Expression tree of exactly-evaluable finite deficient topological
/// measures on open and closed subsets of the space:
///
///   - SimpleContains(D): 1 if the compact interval D is inside the set,
///     else 0. D must be connected; with a disconnected D the measure stops
///     being additive on disjoint compact pairs.
///   - Dirac(x): unit point mass.
///   - LebesgueOn(I): length of the intersection with a compact interval.
///   - ConicCombo: nonnegative rational combination of sub-measures.
///
/// Dirac, LebesgueOn and their combinations are ordinary measures (hence
/// topological measures); a nondegenerate SimpleContains is the canonical
/// deficient-but-not-topological example.
class Dtm {
 public:
  struct SimpleContains { Interval d; };
  struct Dirac { Rational x; };
  struct LebesgueOn { Interval i; };
  struct ConicCombo {
    std::vector<std::pair<Rational, std::shared_ptr<const Dtm>>> terms;
  };
  using Node = std::variant<SimpleContains, Dirac, LebesgueOn, ConicCombo>;

  static Dtm simple_contains(const Space& space, const Rational& lo, const Rational& hi);
  static Dtm dirac(const Space& space, const Rational& x);
  static Dtm lebesgue_on(const Space& space, const Rational& lo, const Rational& hi);
  static Dtm combo(const Space& space, std::vector<std::pair<Rational, Dtm>> terms);

  const Space& space() const { return space_; }
  const Node& node() const { return node_; }

  /// Set value on an admissible (open or closed) set. Throws
  /// Error("NotAdmissibleSet") for sets that are neither.
  Rational operator()(const IntervalSet& set) const;

  Rational total_mass() const;

  /// True when no nondegenerate SimpleContains node occurs anywhere, i.e.
  /// the expression denotes a genuine Borel measure.
  bool is_measure_type() const;

  std::string describe() const;

 private:
  Dtm(Space space, Node node) : space_(std::move(space)), node_(std::move(node)) {}

  Rational eval_unchecked(const IntervalSet& set) const;

  Space space_;
  Node node_;
};

inline Rational eval(const Dtm& mu, const IntervalSet& set) { return mu(set); }

}  // namespace qdtm
