#include "qdtm/interval_set.hpp"

#include "qdtm/error.hpp"

#include <algorithm>
#include <functional>

namespace qdtm {

Interval Interval::make(std::optional<Rational> lo, std::optional<Rational> hi,
                        bool lo_open, bool hi_open) {
  if (!lo.has_value()) lo_open = true;
  if (!hi.has_value()) hi_open = true;
  if (lo && hi) {
    if (*lo > *hi) fail("InvalidInterval", "lo > hi");
    if (*lo == *hi && (lo_open || hi_open))
      fail("InvalidInterval", "degenerate interval must be a closed singleton");
  }
  return Interval{std::move(lo), std::move(hi), lo_open, hi_open};
}

bool Interval::contains(const Rational& x) const {
  if (lo) {
    if (x < *lo || (x == *lo && lo_open)) return false;
  }
  if (hi) {
    if (x > *hi || (x == *hi && hi_open)) return false;
  }
  return true;
}

Rational Interval::length() const {
  require(bounded(), "InvalidInterval", "length of an unbounded interval");
  return *hi - *lo;
}

std::string interval_str(const Interval& iv) {
  std::string out = iv.lo_open ? "(" : "[";
  out += iv.lo ? rational_str(*iv.lo) : "-inf";
  out += ", ";
  out += iv.hi ? rational_str(*iv.hi) : "inf";
  out += iv.hi_open ? ")" : "]";
  return out;
}

namespace {

// Canonical assembly works over the elementary decomposition induced by all
// finite endpoints: gaps (v_i, v_{i+1}) and the cut points themselves. Set
// membership of a gap is decided at its midpoint; the pieces are then merged
// back into maximal intervals.
struct Assembler {
  std::vector<Interval> out;
  bool in_run = false;
  std::optional<Rational> run_lo;
  bool run_lo_open = true;
  std::optional<Rational> last_hi;
  bool last_hi_open = true;

  void piece(bool included, std::optional<Rational> lo, std::optional<Rational> hi,
             bool lo_open, bool hi_open) {
    if (included) {
      if (!in_run) {
        in_run = true;
        run_lo = lo;
        run_lo_open = lo_open;
      }
      last_hi = hi;
      last_hi_open = hi_open;
    } else if (in_run) {
      out.push_back(Interval::make(run_lo, last_hi, run_lo_open, last_hi_open));
      in_run = false;
    }
  }

  std::vector<Interval> finish() {
    if (in_run) {
      out.push_back(Interval::make(run_lo, last_hi, run_lo_open, last_hi_open));
      in_run = false;
    }
    return std::move(out);
  }
};

std::vector<Interval> sweep(const std::vector<Rational>& cuts,
                            const std::function<bool(const Rational&)>& member) {
  Assembler acc;
  if (cuts.empty()) {
    acc.piece(member(0), std::nullopt, std::nullopt, true, true);
    return acc.finish();
  }
  acc.piece(member(cuts.front() - 1), std::nullopt, cuts.front(), true, true);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    acc.piece(member(cuts[i]), cuts[i], cuts[i], false, false);
    if (i + 1 < cuts.size()) {
      const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
      acc.piece(member(mid), cuts[i], cuts[i + 1], true, true);
    }
  }
  acc.piece(member(cuts.back() + 1), cuts.back(), std::nullopt, true, true);
  return acc.finish();
}

void collect_cuts(const std::vector<Interval>& parts, std::vector<Rational>* cuts) {
  for (const Interval& p : parts) {
    if (p.lo) cuts->push_back(*p.lo);
    if (p.hi) cuts->push_back(*p.hi);
  }
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool raw_contains(const std::vector<Interval>& parts, const Rational& x) {
  for (const Interval& p : parts)
    if (p.contains(x)) return true;
  return false;
}

IntervalSet combine(const IntervalSet& a, const IntervalSet& b,
                    const std::function<bool(bool, bool)>& op) {
  std::vector<Rational> cuts;
  collect_cuts(a.parts(), &cuts);
  collect_cuts(b.parts(), &cuts);
  cuts = sorted_unique(std::move(cuts));
  return IntervalSet(sweep(cuts, [&](const Rational& x) {
    return op(a.contains(x), b.contains(x));
  }));
}

}  // namespace

IntervalSet::IntervalSet(const Interval& iv) : parts_{iv} {}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::vector<Rational> cuts;
  collect_cuts(parts, &cuts);
  cuts = sorted_unique(std::move(cuts));
  parts_ = sweep(cuts, [&](const Rational& x) { return raw_contains(parts, x); });
}

bool IntervalSet::contains(const Rational& x) const { return raw_contains(parts_, x); }

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

IntervalSet complement_within(const IntervalSet& a, const Interval& ambient) {
  IntervalSet amb(ambient);
  require(is_subset(a, amb), "NotContained", "set is not inside the ambient interval");
  return set_difference(amb, a);
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_difference(a, b).empty();
}

namespace {

bool part_open_in(const Interval& p, const Space& space) {
  const bool lo_ok =
      p.lo_open || !p.lo ||
      (space.is_compact() && p.lo.has_value() && *p.lo == space.lo());
  const bool hi_ok =
      p.hi_open || !p.hi ||
      (space.is_compact() && p.hi.has_value() && *p.hi == space.hi());
  // A closed singleton is never relatively open except when it is the whole
  // compact space collapsed, which cannot happen (lo < hi).
  return lo_ok && hi_ok;
}

}  // namespace

bool is_open(const IntervalSet& a, const Space& space) {
  for (const Interval& p : a.parts())
    if (!part_open_in(p, space)) return false;
  return true;
}

bool is_compact(const IntervalSet& a, const Space& space) {
  (void)space;
  for (const Interval& p : a.parts())
    if (!p.bounded() || p.lo_open || p.hi_open) return false;
  return true;
}

bool is_closed(const IntervalSet& a, const Space& space) {
  for (const Interval& p : a.parts()) {
    if (p.lo && p.lo_open) return false;
    if (p.hi && p.hi_open) return false;
    if (space.is_compact() && !p.bounded()) return false;
  }
  return true;
}

bool is_admissible(const IntervalSet& a, const Space& space) {
  return is_open(a, space) || is_closed(a, space);
}

Rational total_length(const IntervalSet& a) {
  Rational sum = 0;
  for (const Interval& p : a.parts()) sum += p.length();
  return sum;
}

IntervalSet whole_space(const Space& space) {
  if (space.is_line()) return IntervalSet(Interval::whole_line());
  return IntervalSet(Interval::closed(space.lo(), space.hi()));
}

std::string interval_set_str(const IntervalSet& a) {
  if (a.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < a.parts().size(); ++i) {
    if (i) out += " u ";
    out += interval_str(a.parts()[i]);
  }
  return out;
}

}  // namespace qdtm
