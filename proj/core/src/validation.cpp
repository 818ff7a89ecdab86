#include "qdtm/validation.hpp"

#include "qdtm/randgen.hpp"
#include "qdtm/serialization.hpp"

#include <algorithm>

namespace qdtm {

std::optional<Rational> schedule_limit(
    const std::vector<std::pair<Rational, Rational>>& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].second == samples[i - 1].second) return samples[i].second;
  if (samples.size() < 3) return std::nullopt;
  const auto& [w0, v0] = samples[samples.size() - 3];
  const auto& [w1, v1] = samples[samples.size() - 2];
  const auto& [w2, v2] = samples[samples.size() - 1];
  const Rational slope = (v1 - v0) / (w1 - w0);
  const Rational intercept = v0 - slope * w0;
  if (intercept + slope * w2 != v2) return std::nullopt;
  return intercept;
}

namespace {

// Compact approximation of an open set from inside: shrink every part by
// delta and clamp infinite ends at +-1/delta.
IntervalSet shrink_to_compact(const IntervalSet& u, const Rational& delta) {
  std::vector<Interval> parts;
  const Rational bound = Rational(1) / delta;
  for (const Interval& p : u.parts()) {
    Rational lo = p.lo ? *p.lo + delta : -bound;
    Rational hi = p.hi ? *p.hi - delta : bound;
    if (lo > hi) continue;
    parts.push_back(Interval::closed(lo, hi));
  }
  return IntervalSet(std::move(parts));
}

// Open approximation of a closed set from outside: widen every part by delta.
IntervalSet expand_to_open(const IntervalSet& f, const Space& space,
                           const Rational& delta) {
  std::vector<Interval> parts;
  for (const Interval& p : f.parts()) {
    std::optional<Rational> lo, hi;
    if (p.lo) lo = *p.lo - delta;
    if (p.hi) hi = *p.hi + delta;
    parts.push_back(Interval::make(lo, hi, true, true));
  }
  IntervalSet out(std::move(parts));
  if (space.is_compact()) out = set_intersect(out, whole_space(space));
  return out;
}

const std::vector<Rational>& delta_schedule() {
  static const std::vector<Rational> widths = [] {
    std::vector<Rational> w;
    for (int k = 4; k <= 12; ++k) w.push_back(Rational(1, std::int64_t(1) << k));
    return w;
  }();
  return widths;
}

struct Driver {
  const SetFunction& fn;
  const Space& space;
  std::optional<nlohmann::json> witness;

  bool check_compact_additivity(Rng& rng) {
    // Disjoint compact pair: either two independent windows, or a split of
    // the whole box (the split shape is what catches set functions that are
    // additive only on connected configurations).
    IntervalSet left, right;
    if (rng.coin()) {
      const Rational lo = space.is_line() ? Rational(-4) : space.lo();
      const Rational hi = space.is_line() ? Rational(4) : space.hi();
      const Rational m = rng.grid_point(space);
      if (m <= lo || m + Rational(1, 16) >= hi) return true;
      left = IntervalSet(Interval::closed(lo, m));
      right = IntervalSet(Interval::closed(m + Rational(1, 16), hi));
    } else {
      auto [a, b] = random_window(rng, space);
      auto [c, d] = random_window(rng, space);
      left = IntervalSet(Interval::closed(a, b));
      right = IntervalSet(Interval::closed(c, d));
    }
    if (!set_intersect(left, right).empty()) return true;  // not a test case
    const IntervalSet both = set_union(left, right);
    if (!is_compact(both, space)) return true;
    const Rational vl = fn(left), vr = fn(right), vb = fn(both);
    if (vb != vl + vr) {
      witness = {{"check", "compact_additivity"},
                 {"C", to_json(left)},
                 {"K", to_json(right)},
                 {"value_C", rational_str(vl)},
                 {"value_K", rational_str(vr)},
                 {"value_union", rational_str(vb)}};
      return false;
    }
    return true;
  }

  bool check_inner_regularity(Rng& rng) {
    const IntervalSet u = random_open_set(rng, space);
    std::vector<std::pair<Rational, Rational>> samples;
    for (const Rational& delta : delta_schedule()) {
      const IntervalSet k = shrink_to_compact(u, delta);
      samples.emplace_back(delta, fn(k));
    }
    const auto limit = schedule_limit(samples);
    const Rational direct = fn(u);
    if (!limit || *limit != direct) {
      witness = {{"check", "inner_regularity"},
                 {"U", to_json(u)},
                 {"value_U", rational_str(direct)},
                 {"limit", limit ? rational_str(*limit) : "none"}};
      return false;
    }
    return true;
  }

  bool check_outer_regularity(Rng& rng) {
    IntervalSet f = rng.coin()
                        ? random_compact_set(rng, space)
                        : set_difference(whole_space(space), random_open_set(rng, space));
    std::vector<std::pair<Rational, Rational>> samples;
    for (const Rational& delta : delta_schedule()) {
      const IntervalSet u = expand_to_open(f, space, delta);
      samples.emplace_back(delta, fn(u));
    }
    const auto limit = schedule_limit(samples);
    const Rational direct = fn(f);
    if (!limit || *limit != direct) {
      witness = {{"check", "outer_regularity"},
                 {"F", to_json(f)},
                 {"value_F", rational_str(direct)},
                 {"limit", limit ? rational_str(*limit) : "none"}};
      return false;
    }
    return true;
  }

  bool check_superadditivity(Rng& rng) {
    const IntervalSet a = random_open_set(rng, space, 2);
    // Disjoint admissible children inside a: shrink each part and split it.
    std::vector<IntervalSet> children;
    for (const Interval& p : a.parts()) {
      if (!p.lo || !p.hi) continue;
      const Rational len = *p.hi - *p.lo;
      if (len <= 0) continue;
      const Rational q1 = *p.lo + len / 4, q2 = *p.lo + len / 2, q3 = *p.lo + 3 * len / 4;
      if (rng.coin()) {
        children.push_back(IntervalSet(Interval::make(*p.lo, q2, true, true)));
        children.push_back(IntervalSet(Interval::make(q2, *p.hi, true, true)));
      } else {
        children.push_back(IntervalSet(Interval::closed(q1, q2)));
        children.push_back(IntervalSet(Interval::make(q2, q3, true, true)));
      }
    }
    if (children.empty()) return true;
    Rational sum = 0;
    for (const IntervalSet& c : children) sum += fn(c);
    const Rational whole = fn(a);
    if (sum > whole) {
      witness = {{"check", "superadditivity"},
                 {"A", to_json(a)},
                 {"value_A", rational_str(whole)},
                 {"children_sum", rational_str(sum)}};
      return false;
    }
    return true;
  }

  bool check_monotonicity(Rng& rng) {
    if (rng.coin()) {
      const IntervalSet b = random_open_set(rng, space);
      const IntervalSet a = set_intersect(b, random_open_set(rng, space));
      return check_pair(a, b);
    }
    const IntervalSet b = random_compact_set(rng, space);
    const IntervalSet a = set_intersect(b, random_compact_set(rng, space));
    return check_pair(a, b);
  }

  bool check_pair(const IntervalSet& a, const IntervalSet& b) {
    const Rational va = fn(a), vb = fn(b);
    if (va > vb) {
      witness = {{"check", "monotonicity"},
                 {"A", to_json(a)},
                 {"B", to_json(b)},
                 {"value_A", rational_str(va)},
                 {"value_B", rational_str(vb)}};
      return false;
    }
    return true;
  }
};

}  // namespace

ValidationReport validate_set_function(const SetFunction& fn, const Space& space,
                                       int budget, std::uint64_t seed) {
  Rng rng(seed);
  Driver driver{fn, space, std::nullopt};
  ValidationReport report;

  if (fn(IntervalSet()) != 0) {
    report.witness = {{"check", "empty_set"},
                      {"value", rational_str(fn(IntervalSet()))}};
    return report;
  }

  for (int i = 0; i < budget; ++i) {
    bool ok = true;
    switch (i % 5) {
      case 0: ok = driver.check_compact_additivity(rng); break;
      case 1: ok = driver.check_inner_regularity(rng); break;
      case 2: ok = driver.check_outer_regularity(rng); break;
      case 3: ok = driver.check_superadditivity(rng); break;
      case 4: ok = driver.check_monotonicity(rng); break;
    }
    ++report.cases;
    if (!ok) {
      report.witness = driver.witness;
      return report;
    }
  }
  return report;
}

ValidationReport validate_dtm(const Dtm& mu, int budget, std::uint64_t seed) {
  return validate_set_function([&mu](const IntervalSet& a) { return mu(a); },
                               mu.space(), budget, seed);
}

ValidationReport topological_measure_report(const SetFunction& fn, const Space& space,
                                            int budget, std::uint64_t seed) {
  Rng rng(seed);
  ValidationReport report;
  for (int i = 0; i < budget; ++i) {
    const IntervalSet u = random_open_set(rng, space, 2);
    // Compact K inside U: shrink U or a random sub-window of it.
    IntervalSet base = u;
    if (rng.coin()) {
      auto [a, b] = random_window(rng, space);
      base = set_intersect(u, IntervalSet(Interval::open(a, b)));
    }
    const IntervalSet k = shrink_to_compact(base, Rational(1, 64));
    if (k.empty() || !is_subset(k, u)) continue;
    const IntervalSet rest = set_difference(u, k);
    const Rational vu = fn(u), vk = fn(k), vr = fn(rest);
    ++report.cases;
    if (vu > vk + vr) {
      report.witness = {{"check", "open_compact_split"},
                        {"U", to_json(u)},
                        {"K", to_json(k)},
                        {"value_U", rational_str(vu)},
                        {"value_K", rational_str(vk)},
                        {"value_rest", rational_str(vr)}};
      return report;
    }
  }
  return report;
}

ValidationReport is_topological_measure(const Dtm& mu, int budget, std::uint64_t seed) {
  return topological_measure_report([&mu](const IntervalSet& a) { return mu(a); },
                                    mu.space(), budget, seed);
}

}  // namespace qdtm
