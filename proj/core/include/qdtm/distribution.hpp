#pragma once

#include "qdtm/measure.hpp"
#include "qdtm/pwl.hpp"
#include "qdtm/step_function.hpp"
#include "qdtm/validation.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace qdtm {

/// Finite measure on the line given by atoms plus a piecewise-constant
/// density: the exact form every boundary measure of the catalog takes.
struct BoundaryMeasure {
  std::vector<std::pair<Rational, Rational>> atoms;              // (loc, mass > 0)
  std::vector<std::tuple<Rational, Rational, Rational>> density;  // (lo, hi, value > 0)

  Rational total() const;
  /// Hull [lo, hi] of the support; nullopt for the zero measure.
  std::optional<std::pair<Rational, Rational>> support_hull() const;

  friend bool operator==(const BoundaryMeasure& a, const BoundaryMeasure& b) = default;
};

/// The four distribution functions of a measure/function pair:
///   L1(t) = mu(f < t),  L2(t) = mu(f <= t),
///   R1(t) = mu(f > t),  R2(t) = mu(f >= t),
/// assembled exactly from the measure expression. E and E1 collect the
/// points where R2 fails left continuity / L2 fails right continuity.
struct DistributionBundle {
  MonotonePwFunction L1, L2, R1, R2;
  Rational mass;
  Rational hull_lo, hull_hi;  // [min f, max f]
  std::vector<Rational> E, E1;
};

DistributionBundle distribution_bundle(const Dtm& mu, const PwlFunction& f);

/// Lebesgue-Stieltjes measure induced by a monotone function: full jumps
/// become atoms, affine slopes become densities (absolute values).
BoundaryMeasure stieltjes_measure(const MonotonePwFunction& g);

BoundaryMeasure right_measure(const DistributionBundle& bundle);  // from -R1
BoundaryMeasure left_measure(const DistributionBundle& bundle);   // from L1

Rational measure_of(const BoundaryMeasure& m, const IntervalSet& a);

/// Integral of the profile against the measure; the profile domain must
/// cover the support hull of m.
Rational stieltjes_integral(const Profile& phi, const BoundaryMeasure& m);
/// Integral of the identity (no domain bookkeeping needed).
Rational stieltjes_integral_id(const BoundaryMeasure& m);

/// r = l criterion: L1 + R1 equals the total mass outside a finite set.
/// On failure the witness is an open interval where the sum falls short.
struct RlVerdict {
  bool equal = false;
  std::optional<Interval> witness;
};
RlVerdict rl_equal_criterion(const DistributionBundle& bundle);

/// Sampled pushforward inequalities mu(f^{-1}(A)) <= r(A), l(A); for
/// measure-type mu additionally equality on open sets, and on closed sets
/// (avoiding 0 when the space is the line).
CheckReport pushforward_check(const Dtm& mu, const PwlFunction& f,
                              const DistributionBundle& bundle, int cases,
                              std::uint64_t seed);

/// Exact identity
///   int_a^b G(x+) dm_F + int_a^b F(x-) dm_G = F(b+)G(b+) - F(a-)G(a-)
/// for nondecreasing F, G; atoms at a and b count in full.
CheckReport integration_by_parts_check(const MonotonePwFunction& F,
                                       const MonotonePwFunction& G, const Rational& a,
                                       const Rational& b);

}  // namespace qdtm
