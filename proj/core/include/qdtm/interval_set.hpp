#pragma once

#include "qdtm/rational.hpp"
#include "qdtm/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdtm {

/// One interval over the extended line. Endpoints are rational or infinite
/// (nullopt); infinite endpoints are always open. A singleton [a, a] has both
/// endpoints closed.
struct Interval {
  std::optional<Rational> lo;  // nullopt means -inf
  std::optional<Rational> hi;  // nullopt means +inf
  bool lo_open = true;
  bool hi_open = true;

  static Interval make(std::optional<Rational> lo, std::optional<Rational> hi,
                       bool lo_open, bool hi_open);
  static Interval closed(Rational a, Rational b) { return make(a, b, false, false); }
  static Interval open(Rational a, Rational b) { return make(a, b, true, true); }
  static Interval point(Rational a) { return make(a, a, false, false); }
  static Interval below(Rational b, bool open) { return make(std::nullopt, b, true, open); }
  static Interval above(Rational a, bool open) { return make(a, std::nullopt, open, true); }
  static Interval whole_line() { return make(std::nullopt, std::nullopt, true, true); }

  bool bounded() const { return lo.has_value() && hi.has_value(); }
  bool singleton() const { return bounded() && *lo == *hi; }
  bool contains(const Rational& x) const;

  /// hi - lo; requires a bounded interval.
  Rational length() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

std::string interval_str(const Interval& iv);

/// Canonical finite union of disjoint, non-mergeable intervals sorted by
/// position. The empty set is the empty part list. Two canonical sets are
/// equal as sets iff their part lists are equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& iv);
  explicit IntervalSet(std::vector<Interval> parts);  // any list; canonicalizes

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

/// ambient \ a. Throws Error("NotContained") unless a is a subset of the
/// ambient interval (the whole line or one compact interval).
IntervalSet complement_within(const IntervalSet& a, const Interval& ambient);

bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// Topology relative to a space. On a compact space [a, b] an interval that
/// reaches a or b with a closed endpoint still counts as open there.
bool is_open(const IntervalSet& a, const Space& space);
bool is_compact(const IntervalSet& a, const Space& space);
bool is_closed(const IntervalSet& a, const Space& space);
bool is_admissible(const IntervalSet& a, const Space& space);  // open or closed

/// Sum of part lengths; every part must be bounded.
Rational total_length(const IntervalSet& a);

IntervalSet whole_space(const Space& space);
std::string interval_set_str(const IntervalSet& a);

}  // namespace qdtm
