#include "qdtm/pwl.hpp"

#include "qdtm/error.hpp"

#include <algorithm>

namespace qdtm {

namespace {

void require_strictly_increasing(const std::vector<Breakpoint>& nodes) {
  require(!nodes.empty(), "InvalidFunction", "breakpoint list is empty");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    require(nodes[i - 1].first < nodes[i].first, "InvalidFunction",
            "breakpoint x values must be strictly increasing");
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  // (b.x - a.x)(c.y - a.y) == (c.x - a.x)(b.y - a.y)
  return (b.first - a.first) * (c.second - a.second) ==
         (c.first - a.first) * (b.second - a.second);
}

std::vector<Breakpoint> canonicalize(const Space& space, std::vector<Breakpoint> nodes) {
  require_strictly_increasing(nodes);
  if (space.is_compact()) {
    require(nodes.front().first == space.lo() && nodes.back().first == space.hi(),
            "InvalidFunction", "compact-space function must span the whole interval");
  } else {
    require(nodes.front().second == 0 && nodes.back().second == 0, "InvalidFunction",
            "line function needs zero boundary values (compact support)");
  }
  // Drop interior nodes that sit exactly on the segment of their neighbors.
  std::vector<Breakpoint> kept;
  kept.reserve(nodes.size());
  for (const Breakpoint& n : nodes) {
    while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), n))
      kept.pop_back();
    kept.push_back(n);
  }
  if (space.is_line()) {
    // Redundant flat-zero tail nodes describe the implicit tails already.
    while (kept.size() >= 2 && kept[0].second == 0 && kept[1].second == 0)
      kept.erase(kept.begin());
    while (kept.size() >= 2 && kept[kept.size() - 1].second == 0 &&
           kept[kept.size() - 2].second == 0)
      kept.pop_back();
    if (kept.size() == 1) kept[0] = {Rational(0), Rational(0)};  // canonical zero
  }
  return kept;
}

Rational interp(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  return a.second +
         (b.second - a.second) * (x - a.first) / (b.first - a.first);
}

// A linear segment of the extended graph; unbounded ends carry value 0 and
// only occur on the line.
struct Segment {
  std::optional<Rational> lo, hi;
  Rational y_lo, y_hi;  // values at finite ends; 0 at infinite ends
};

std::vector<Segment> segments_of(const PwlFunction& f) {
  std::vector<Segment> out;
  const auto& ns = f.nodes();
  if (f.space().is_line())
    out.push_back({std::nullopt, ns.front().first, 0, ns.front().second});
  for (std::size_t i = 0; i + 1 < ns.size(); ++i)
    out.push_back({ns[i].first, ns[i + 1].first, ns[i].second, ns[i + 1].second});
  if (f.space().is_line())
    out.push_back({ns.back().first, std::nullopt, ns.back().second, 0});
  return out;
}

}  // namespace

PwlFunction::PwlFunction(Space space, std::vector<Breakpoint> nodes)
    : space_(std::move(space)), nodes_(canonicalize(space_, std::move(nodes))) {}

Rational PwlFunction::operator()(const Rational& x) const {
  if (space_.is_compact())
    require(space_.contains(x), "OutOfDomain", "x outside the compact space");
  if (x <= nodes_.front().first)
    return x == nodes_.front().first ? nodes_.front().second : Rational(0);
  if (x >= nodes_.back().first)
    return x == nodes_.back().first ? nodes_.back().second : Rational(0);
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), x,
      [](const Rational& v, const Breakpoint& n) { return v < n.first; });
  return interp(*(it - 1), *it, x);
}

bool PwlFunction::is_zero() const {
  for (const Breakpoint& n : nodes_)
    if (n.second != 0) return false;
  return true;
}

Profile::Profile(std::vector<Breakpoint> nodes) : nodes_(std::move(nodes)) {
  require_strictly_increasing(nodes_);
  require(nodes_.size() >= 2, "InvalidProfile", "profile needs a nondegenerate domain");
  std::vector<Breakpoint> kept;
  for (const Breakpoint& n : nodes_) {
    while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), n))
      kept.pop_back();
    kept.push_back(n);
  }
  nodes_ = std::move(kept);
}

Rational Profile::operator()(const Rational& t) const {
  require(domain_lo() <= t && t <= domain_hi(), "OutOfDomain",
          "profile evaluated outside its domain");
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), t,
      [](const Rational& v, const Breakpoint& n) { return v < n.first; });
  if (it == nodes_.begin()) return nodes_.front().second;
  if (it == nodes_.end()) return nodes_.back().second;
  return interp(*(it - 1), *it, t);
}

bool Profile::non_decreasing() const {
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i].second < nodes_[i - 1].second) return false;
  return true;
}

bool Profile::non_increasing() const {
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i].second > nodes_[i - 1].second) return false;
  return true;
}

MonotoneProfile::MonotoneProfile(ProfileDirection direction, std::vector<Breakpoint> nodes)
    : profile_(std::move(nodes)), direction_(direction) {
  const bool ok = direction == ProfileDirection::NonDecreasing
                      ? profile_.non_decreasing()
                      : profile_.non_increasing();
  require(ok, "InvalidProfile", "profile slopes contradict the declared direction");
}

MonotoneProfile MonotoneProfile::identity(const Rational& lo, const Rational& hi) {
  return MonotoneProfile(ProfileDirection::NonDecreasing, {{lo, lo}, {hi, hi}});
}

MonotoneProfile MonotoneProfile::constant(const Rational& lo, const Rational& hi,
                                          const Rational& c) {
  return MonotoneProfile(ProfileDirection::NonDecreasing, {{lo, c}, {hi, c}});
}

MonotoneProfile MonotoneProfile::ramp(const Rational& lo, const Rational& hi,
                                      const Rational& t0, const Rational& cap) {
  require(cap > 0, "InvalidProfile", "ramp cap must be positive");
  std::vector<Breakpoint> nodes;
  auto value = [&](const Rational& t) {
    Rational v = t - t0;
    if (v < 0) v = 0;
    if (v > cap) v = cap;
    return v;
  };
  std::vector<Rational> xs{lo, hi};
  if (t0 > lo && t0 < hi) xs.push_back(t0);
  if (t0 + cap > lo && t0 + cap < hi) xs.push_back(t0 + cap);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const Rational& x : xs) nodes.push_back({x, value(x)});
  return MonotoneProfile(ProfileDirection::NonDecreasing, std::move(nodes));
}

MonotoneProfile MonotoneProfile::clip_at(const Rational& lo, const Rational& hi,
                                         const Rational& c) {
  std::vector<Rational> xs{lo, hi};
  if (c > lo && c < hi) xs.push_back(c);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> nodes;
  for (const Rational& x : xs) nodes.push_back({x, rational_min(x, c)});
  return MonotoneProfile(ProfileDirection::NonDecreasing, std::move(nodes));
}

Profile combine_profiles(const Rational& a, const Profile& phi, const Rational& b,
                         const Profile& psi) {
  const Rational lo = rational_max(phi.domain_lo(), psi.domain_lo());
  const Rational hi = rational_min(phi.domain_hi(), psi.domain_hi());
  require(lo < hi, "DomainTooSmall", "profile domains do not overlap");
  std::vector<Rational> xs{lo, hi};
  for (const auto& n : phi.nodes())
    if (n.first > lo && n.first < hi) xs.push_back(n.first);
  for (const auto& n : psi.nodes())
    if (n.first > lo && n.first < hi) xs.push_back(n.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> nodes;
  for (const Rational& x : xs) nodes.push_back({x, a * phi(x) + b * psi(x)});
  return Profile(std::move(nodes));
}

MonotoneProfile combine_monotone_profiles(const Rational& a, const MonotoneProfile& phi,
                                          const Rational& b, const MonotoneProfile& psi) {
  require(a >= 0 && b >= 0, "InvalidProfile", "conic combination needs a, b >= 0");
  require(phi.direction() == psi.direction(), "InvalidProfile",
          "conic combination needs profiles of one direction");
  Profile sum = combine_profiles(a, phi.profile(), b, psi.profile());
  return MonotoneProfile(phi.direction(), sum.nodes());
}

PwlFunction combine(const PwlFunction& f, const PwlFunction& g, CombineOp op) {
  require_same_space(f.space(), g.space());
  std::vector<Rational> xs;
  for (const auto& n : f.nodes()) xs.push_back(n.first);
  for (const auto& n : g.nodes()) xs.push_back(n.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  if (op != CombineOp::Add) {
    // Min/Max create breakpoints where the two graphs cross.
    std::vector<Rational> crossings;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const Rational d0 = f(xs[i]) - g(xs[i]);
      const Rational d1 = f(xs[i + 1]) - g(xs[i + 1]);
      if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
        crossings.push_back(xs[i] + (xs[i + 1] - xs[i]) * (-d0) / (d1 - d0));
      }
    }
    xs.insert(xs.end(), crossings.begin(), crossings.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }

  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (const Rational& x : xs) {
    const Rational fv = f(x), gv = g(x);
    Rational v;
    switch (op) {
      case CombineOp::Add: v = fv + gv; break;
      case CombineOp::Min: v = rational_min(fv, gv); break;
      case CombineOp::Max: v = rational_max(fv, gv); break;
    }
    nodes.push_back({x, v});
  }
  return PwlFunction(f.space(), std::move(nodes));
}

PwlFunction scale(const PwlFunction& f, const Rational& c) {
  std::vector<Breakpoint> nodes = f.nodes();
  for (auto& n : nodes) n.second *= c;
  return PwlFunction(f.space(), std::move(nodes));
}

PwlFunction pos_part(const PwlFunction& f) {
  return combine(f, zero_function(f.space()), CombineOp::Max);
}

PwlFunction neg_part(const PwlFunction& f) { return pos_part(scale(f, -1)); }

namespace {

// Solve f > t (or >= t) on one linear segment; appends the solution interval.
void segment_superlevel(const Segment& s, const Rational& t, bool strict,
                        std::vector<Interval>* out) {
  auto keep_all = [&] {
    out->push_back(Interval::make(s.lo, s.hi, !s.lo.has_value(), !s.hi.has_value()));
  };
  if (s.y_lo == s.y_hi) {
    if (s.y_lo > t || (!strict && s.y_lo == t)) keep_all();
    return;
  }
  // Finite sloped segment (infinite ends always carry constant value 0).
  const Rational& lo = *s.lo;
  const Rational& hi = *s.hi;
  const Rational cross = lo + (t - s.y_lo) * (hi - lo) / (s.y_hi - s.y_lo);
  if (s.y_lo < s.y_hi) {
    const bool hi_in = strict ? s.y_hi > t : s.y_hi >= t;
    const bool lo_in = strict ? s.y_lo > t : s.y_lo >= t;
    if (!hi_in) return;
    if (lo_in) keep_all();
    else out->push_back(Interval::make(cross, hi, strict, false));
  } else {
    const bool lo_in = strict ? s.y_lo > t : s.y_lo >= t;
    const bool hi_in = strict ? s.y_hi > t : s.y_hi >= t;
    if (!lo_in) return;
    if (hi_in) keep_all();
    else out->push_back(Interval::make(lo, cross, false, strict));
  }
}

}  // namespace

IntervalSet superlevel(const PwlFunction& f, const Rational& t, bool strict) {
  std::vector<Interval> pieces;
  for (const Segment& s : segments_of(f)) segment_superlevel(s, t, strict, &pieces);
  return IntervalSet(std::move(pieces));
}

IntervalSet sublevel(const PwlFunction& f, const Rational& t, bool strict) {
  return superlevel(scale(f, -1), -t, strict);
}

IntervalSet preimage(const PwlFunction& f, const Interval& values) {
  IntervalSet result = whole_space(f.space());
  if (values.lo)
    result = set_intersect(result, superlevel(f, *values.lo, values.lo_open));
  if (values.hi)
    result = set_intersect(result, sublevel(f, *values.hi, values.hi_open));
  return result;
}

IntervalSet preimage(const PwlFunction& f, const IntervalSet& values) {
  IntervalSet result;
  for (const Interval& part : values.parts())
    result = set_union(result, preimage(f, part));
  return result;
}

PwlFunction compose_profile(const Profile& phi, const PwlFunction& f) {
  const auto [fmin, fmax] = range_bounds(f);
  require(phi.domain_lo() <= fmin && fmax <= phi.domain_hi(), "DomainTooSmall",
          "profile domain does not cover the range of f");
  if (f.space().is_line())
    require(phi(Rational(0)) == 0, "NotAnchoredAtZero",
            "composition on the line needs phi(0) = 0");

  std::vector<Rational> xs;
  for (const auto& n : f.nodes()) xs.push_back(n.first);
  // Insert preimages of phi's breakpoints inside each sloped segment of f.
  const auto& ns = f.nodes();
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    const Rational& y0 = ns[i].second;
    const Rational& y1 = ns[i + 1].second;
    if (y0 == y1) continue;
    const Rational lo = rational_min(y0, y1), hi = rational_max(y0, y1);
    for (const auto& pn : phi.nodes()) {
      if (pn.first > lo && pn.first < hi) {
        xs.push_back(ns[i].first +
                     (pn.first - y0) * (ns[i + 1].first - ns[i].first) / (y1 - y0));
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (const Rational& x : xs) nodes.push_back({x, phi(f(x))});
  return PwlFunction(f.space(), std::move(nodes));
}

PwlFunction compose_monotone(const MonotoneProfile& phi, const PwlFunction& f) {
  return compose_profile(phi.profile(), f);
}

std::vector<PwlFunction> cone_partition(const PwlFunction& f, int n) {
  require(n >= 1, "RangeViolation", "partition count must be positive");
  const auto [fmin, fmax] = range_bounds(f);
  require(fmin >= 0 && fmax <= 1, "RangeViolation",
          "cone partition needs 0 <= f <= 1");
  std::vector<PwlFunction> pieces;
  pieces.reserve(static_cast<std::size_t>(n));
  const Rational cap = Rational(1) / n;
  for (int i = 1; i <= n; ++i) {
    const Rational t0 = Rational(i - 1) / n;
    pieces.push_back(
        compose_monotone(MonotoneProfile::ramp(0, 1, t0, cap), f));
  }
  return pieces;
}

std::pair<Rational, Rational> range_bounds(const PwlFunction& f) {
  Rational lo = f.nodes().front().second, hi = lo;
  for (const auto& n : f.nodes()) {
    lo = rational_min(lo, n.second);
    hi = rational_max(hi, n.second);
  }
  return {lo, hi};
}

IntervalSet support(const PwlFunction& f) {
  std::vector<Interval> parts;
  const auto& ns = f.nodes();
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    // A linear segment with both end values zero is identically zero.
    if (ns[i].second == 0 && ns[i + 1].second == 0) continue;
    parts.push_back(Interval::closed(ns[i].first, ns[i + 1].first));
  }
  if (ns.size() == 1 && ns[0].second != 0)
    parts.push_back(Interval::point(ns[0].first));
  return IntervalSet(std::move(parts));
}

std::pair<Rational, Rational> restricted_extrema(const PwlFunction& f,
                                                 const IntervalSet& k) {
  require(!k.empty(), "EmptySet", "extrema over the empty set");
  require(is_compact(k, f.space()), "InvalidInterval",
          "restricted extrema need a compact set");
  std::vector<Rational> candidates;
  for (const Interval& part : k.parts()) {
    if (f.space().is_compact())
      require(f.space().contains(*part.lo) && f.space().contains(*part.hi),
              "OutOfDomain", "set leaves the compact space");
    candidates.push_back(f(*part.lo));
    candidates.push_back(f(*part.hi));
    for (const auto& n : f.nodes())
      if (n.first > *part.lo && n.first < *part.hi) candidates.push_back(n.second);
  }
  Rational lo = candidates.front(), hi = candidates.front();
  for (const Rational& c : candidates) {
    lo = rational_min(lo, c);
    hi = rational_max(hi, c);
  }
  return {lo, hi};
}

Rational sup_norm(const PwlFunction& f) {
  Rational best = 0;
  for (const auto& n : f.nodes()) best = rational_max(best, rational_abs(n.second));
  return best;
}

Rational sup_norm_diff(const PwlFunction& f, const PwlFunction& g) {
  return sup_norm(combine(f, scale(g, -1), CombineOp::Add));
}

PwlFunction zero_function(const Space& space) {
  if (space.is_line()) return PwlFunction(space, {{0, 0}});
  return PwlFunction(space, {{space.lo(), 0}, {space.hi(), 0}});
}

PwlFunction constant_function(const Space& space, const Rational& c) {
  if (space.is_line()) {
    require(c == 0, "InvalidFunction", "only the zero constant lives on the line");
    return zero_function(space);
  }
  return PwlFunction(space, {{space.lo(), c}, {space.hi(), c}});
}

}  // namespace qdtm
