#pragma once

#include "qdtm/interval_set.hpp"
#include "qdtm/rational.hpp"
#include "qdtm/space.hpp"

#include <utility>
#include <vector>

namespace qdtm {

using Breakpoint = std::pair<Rational, Rational>;  // (x, y)

/// Continuous piecewise-linear function with rational breakpoints.
///
/// On the line the function is zero outside the breakpoint hull (first and
/// last y must be 0), so it is compactly supported. On a compact space the
/// breakpoints span exactly [lo, hi]. Instances are canonical: collinear
/// interior nodes and redundant zero tail nodes are removed on construction,
/// so operator== is function equality.
class PwlFunction {
 public:
  PwlFunction(Space space, std::vector<Breakpoint> nodes);

  const Space& space() const { return space_; }
  const std::vector<Breakpoint>& nodes() const { return nodes_; }

  /// Value at x; linear between nodes, zero tails on the line.
  /// Throws Error("OutOfDomain") outside a compact space.
  Rational operator()(const Rational& x) const;

  bool is_zero() const;

  friend bool operator==(const PwlFunction& a, const PwlFunction& b) = default;

 private:
  Space space_;
  std::vector<Breakpoint> nodes_;
};

/// Piecewise-linear profile phi on a compact domain [domain_lo, domain_hi],
/// used to transport test functions: phi o f. Not necessarily monotone.
class Profile {
 public:
  explicit Profile(std::vector<Breakpoint> nodes);

  const std::vector<Breakpoint>& nodes() const { return nodes_; }
  const Rational& domain_lo() const { return nodes_.front().first; }
  const Rational& domain_hi() const { return nodes_.back().first; }

  Rational operator()(const Rational& t) const;  // OutOfDomain outside

  bool non_decreasing() const;
  bool non_increasing() const;

  friend bool operator==(const Profile& a, const Profile& b) = default;

 private:
  std::vector<Breakpoint> nodes_;
};

enum class ProfileDirection { NonDecreasing, NonIncreasing };

/// A Profile with a validated slope sign.
class MonotoneProfile {
 public:
  MonotoneProfile(ProfileDirection direction, std::vector<Breakpoint> nodes);

  const Profile& profile() const { return profile_; }
  ProfileDirection direction() const { return direction_; }
  Rational operator()(const Rational& t) const { return profile_(t); }

  static MonotoneProfile identity(const Rational& lo, const Rational& hi);
  static MonotoneProfile constant(const Rational& lo, const Rational& hi,
                                  const Rational& c);
  /// phi(t) = clamp(t - t0, 0, cap) over [lo, hi]: the ramp used to slice a
  /// [0, 1]-valued function into cone pieces.
  static MonotoneProfile ramp(const Rational& lo, const Rational& hi,
                              const Rational& t0, const Rational& cap);
  /// phi(t) = min(t, c) over [lo, hi].
  static MonotoneProfile clip_at(const Rational& lo, const Rational& hi,
                                 const Rational& c);

  friend bool operator==(const MonotoneProfile& a, const MonotoneProfile& b) = default;

 private:
  Profile profile_;
  ProfileDirection direction_;
};

/// a*phi + b*psi on the intersection of the domains.
Profile combine_profiles(const Rational& a, const Profile& phi, const Rational& b,
                         const Profile& psi);
MonotoneProfile combine_monotone_profiles(const Rational& a, const MonotoneProfile& phi,
                                          const Rational& b, const MonotoneProfile& psi);

enum class CombineOp { Add, Min, Max };

PwlFunction combine(const PwlFunction& f, const PwlFunction& g, CombineOp op);
PwlFunction scale(const PwlFunction& f, const Rational& c);
PwlFunction pos_part(const PwlFunction& f);
PwlFunction neg_part(const PwlFunction& f);  // f = pos_part(f) - neg_part(f)

/// Exact preimage f^{-1}((t, inf)) (strict) or f^{-1}([t, inf)).
IntervalSet superlevel(const PwlFunction& f, const Rational& t, bool strict);
/// Exact preimage f^{-1}((-inf, t)) (strict) or f^{-1}((-inf, t]).
IntervalSet sublevel(const PwlFunction& f, const Rational& t, bool strict);
IntervalSet preimage(const PwlFunction& f, const Interval& values);
IntervalSet preimage(const PwlFunction& f, const IntervalSet& values);

/// phi o f for a general profile; breakpoints land on f's nodes plus the
/// preimages of phi's nodes. Requires phi's domain to cover f's range, and
/// phi(0) = 0 on the line (so zero tails are preserved).
PwlFunction compose_profile(const Profile& phi, const PwlFunction& f);
PwlFunction compose_monotone(const MonotoneProfile& phi, const PwlFunction& f);

/// Slices f (range in [0, 1], f >= 0) into n ramp pieces f_i with
/// sum f_i = f and 0 <= f_i <= 1/n; each piece is a monotone composition.
std::vector<PwlFunction> cone_partition(const PwlFunction& f, int n);

std::pair<Rational, Rational> range_bounds(const PwlFunction& f);  // (min, max)
IntervalSet support(const PwlFunction& f);
/// (min over K, max over K); K compact nonempty inside f's space.
std::pair<Rational, Rational> restricted_extrema(const PwlFunction& f,
                                                 const IntervalSet& k);

Rational sup_norm(const PwlFunction& f);
Rational sup_norm_diff(const PwlFunction& f, const PwlFunction& g);

PwlFunction zero_function(const Space& space);
/// Constant c on a compact space (on the line only c = 0 is representable).
PwlFunction constant_function(const Space& space, const Rational& c);

}  // namespace qdtm
