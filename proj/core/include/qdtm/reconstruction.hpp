#pragma once

#include "qdtm/measure.hpp"
#include "qdtm/pwl.hpp"
#include "qdtm/quasi_integral.hpp"
#include "qdtm/validation.hpp"

#include <vector>

namespace qdtm {

/// Decreasing sequence of ramp widths used to drive the sup/inf of the
/// measure reconstruction. Samples either stabilize (step-type mass) or
/// become exactly affine in the width (Lebesgue-type mass), so two equal
/// consecutive samples or an affine fit validated by a third sample give the
/// exact limit.
struct RampSchedule {
  std::vector<Rational> widths;

  static RampSchedule standard();  // 1/4, 1/8, ..., 1/2^10
};

struct ReconstructionResult {
  enum class Kind { Stabilized, Extrapolated };

  Rational value;
  Kind kind = Kind::Stabilized;
  Rational stabilized_at;                            // width (Stabilized)
  Rational slope, intercept, residual;               // fit data (Extrapolated)
  std::vector<std::pair<Rational, Rational>> samples;  // (width, value)
};

/// Witness for the open-set supremum: 0 <= f <= 1, supp f inside U, f = 1 on
/// U shrunk by eps on each side of each part. Parts shorter than 2*eps give
/// a capped tent; unbounded parts are covered out to +-1/eps.
PwlFunction plateau_inside(const Space& space, const IntervalSet& u, const Rational& eps);

/// Witness for the compact-set infimum: g >= 1_K, 0 <= g <= 1, with outward
/// ramps of width eps (clipped to a compact space).
PwlFunction plateau_over(const Space& space, const IntervalSet& k, const Rational& eps);

/// mu_rho(U) = sup{rho(f) : 0 <= f <= 1, supp f in U} driven over the
/// schedule; samples must be nondecreasing, else Error("NotMonotoneInput").
ReconstructionResult reconstruct_open(const FunctionalHandle& rho, const IntervalSet& u,
                                      const RampSchedule& schedule);

/// mu_rho(K) = inf{rho(g) : g >= 1_K}; samples must be nonincreasing.
ReconstructionResult reconstruct_compact(const FunctionalHandle& rho,
                                         const IntervalSet& k,
                                         const RampSchedule& schedule);

/// Dispatch on the set's topology (open or compact).
ReconstructionResult reconstruct_set(const FunctionalHandle& rho, const IntervalSet& a,
                                     const RampSchedule& schedule);

/// Representation round trip: reconstructing from the induced functional
/// returns the measure, set by set.
CheckReport round_trip_check(const Dtm& mu, const std::vector<IntervalSet>& sets,
                             const RampSchedule& schedule);

/// sup of rho over [0,1]-valued plateaus with growing support; equals the
/// reconstructed total mass.
Rational norm_estimate(const FunctionalHandle& rho, const RampSchedule& schedule);

}  // namespace qdtm
