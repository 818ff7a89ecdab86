#include "qdtm/distribution.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/serialization.hpp"

#include <algorithm>

namespace qdtm {

namespace {

enum class LevelKind { SubStrict, SubWeak, SupStrict, SupWeak };

IntervalSet level_set(const PwlFunction& f, const Rational& t, LevelKind kind) {
  switch (kind) {
    case LevelKind::SubStrict: return sublevel(f, t, true);
    case LevelKind::SubWeak: return sublevel(f, t, false);
    case LevelKind::SupStrict: return superlevel(f, t, true);
    case LevelKind::SupWeak: return superlevel(f, t, false);
  }
  return {};
}

MonotonePwFunction::Direction direction_of(LevelKind kind) {
  return (kind == LevelKind::SubStrict || kind == LevelKind::SubWeak)
             ? MonotonePwFunction::Direction::NonDecreasing
             : MonotonePwFunction::Direction::NonIncreasing;
}

// t-values where the combinatorics of the level sets can change for this
// measure node: all node values of f plus the node-specific landmarks.
std::vector<Rational> critical_levels(const Dtm& mu, const PwlFunction& f) {
  std::vector<Rational> ts;
  for (const auto& n : f.nodes()) ts.push_back(n.second);

  struct Visitor {
    const PwlFunction& f;
    std::vector<Rational>& ts;
    void operator()(const Dtm::SimpleContains& n) const {
      const auto [lo, hi] = restricted_extrema(f, IntervalSet(n.d));
      ts.push_back(lo);
      ts.push_back(hi);
    }
    void operator()(const Dtm::Dirac& n) const { ts.push_back(f(n.x)); }
    void operator()(const Dtm::LebesgueOn& n) const {
      ts.push_back(f(*n.i.lo));
      ts.push_back(f(*n.i.hi));
    }
    void operator()(const Dtm::ConicCombo& n) const {
      for (const auto& [coeff, sub] : n.terms) {
        (void)coeff;
        auto more = critical_levels(*sub, f);
        ts.insert(ts.end(), more.begin(), more.end());
      }
    }
  };
  std::visit(Visitor{f, ts}, mu.node());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Exact assembly of t |-> mu(level set of f at t). Between consecutive
// critical levels the map is affine (level-set endpoints move affinely in t
// and no structural change happens), so two interior samples per gap pin the
// segment down; the gap between samples doubles as a consistency check in
// the constructor, which rejects non-monotone data.
MonotonePwFunction build_distribution(const Dtm& mu, const PwlFunction& f,
                                      const std::vector<Rational>& criticals,
                                      LevelKind kind) {
  auto at = [&](const Rational& t) { return mu(level_set(f, t, kind)); };

  const std::size_t k = criticals.size();
  std::vector<MonotonePwFunction::Node> nodes(k);
  for (std::size_t i = 0; i < k; ++i) {
    nodes[i].t = criticals[i];
    nodes[i].value = at(criticals[i]);
  }
  nodes.front().left = at(criticals.front() - 1);
  nodes.back().right = at(criticals.back() + 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Rational gap = criticals[i + 1] - criticals[i];
    const Rational s1 = criticals[i] + gap / 3;
    const Rational s2 = criticals[i] + 2 * gap / 3;
    const Rational v1 = at(s1), v2 = at(s2);
    const Rational slope = (v2 - v1) / (s2 - s1);
    nodes[i].right = v1 - slope * (s1 - criticals[i]);
    nodes[i + 1].left = v1 + slope * (criticals[i + 1] - s1);
  }
  return MonotonePwFunction(direction_of(kind), std::move(nodes));
}

void assert_bundle_invariants(const DistributionBundle& b) {
  require(b.L1.left_continuous(), "InternalInvariant", "L1 must be left-continuous");
  require(b.R1.right_continuous(), "InternalInvariant", "R1 must be right-continuous");
  require(b.L1.value(b.hull_lo) == 0, "InternalInvariant", "L1(min f) must vanish");
  require(b.R1.value(b.hull_hi) == 0, "InternalInvariant", "R1(max f) must vanish");
  require(b.L2.value(b.hull_hi) == b.mass, "InternalInvariant", "L2(max f) = mass");
  require(b.R2.value(b.hull_lo) == b.mass, "InternalInvariant", "R2(min f) = mass");
  // L1 <= L2, R1 >= R2 and L1 + R1 <= mass at breakpoints and between them.
  std::vector<Rational> probes;
  for (const auto& n : b.L1.nodes()) probes.push_back(n.t);
  for (const auto& n : b.L2.nodes()) probes.push_back(n.t);
  for (const auto& n : b.R1.nodes()) probes.push_back(n.t);
  for (const auto& n : b.R2.nodes()) probes.push_back(n.t);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<Rational> all = probes;
  for (std::size_t i = 0; i + 1 < probes.size(); ++i)
    all.push_back((probes[i] + probes[i + 1]) / 2);
  for (const Rational& t : all) {
    require(b.L1.value(t) <= b.L2.value(t), "InternalInvariant", "L1 <= L2");
    require(b.R1.value(t) <= b.R2.value(t), "InternalInvariant", "R1 <= R2");
    require(b.L1.value(t) + b.R1.value(t) <= b.mass, "InternalInvariant",
            "L1 + R1 <= mass");
  }
}

}  // namespace

DistributionBundle distribution_bundle(const Dtm& mu, const PwlFunction& f) {
  require_same_space(mu.space(), f.space());
  const auto criticals = critical_levels(mu, f);
  const auto [lo, hi] = range_bounds(f);
  DistributionBundle bundle{
      build_distribution(mu, f, criticals, LevelKind::SubStrict),
      build_distribution(mu, f, criticals, LevelKind::SubWeak),
      build_distribution(mu, f, criticals, LevelKind::SupStrict),
      build_distribution(mu, f, criticals, LevelKind::SupWeak),
      mu.total_mass(),
      lo,
      hi,
      {},
      {}};
  bundle.E = bundle.R2.left_discontinuities();
  bundle.E1 = bundle.L2.right_discontinuities();
  assert_bundle_invariants(bundle);
  return bundle;
}

Rational BoundaryMeasure::total() const {
  Rational sum = 0;
  for (const auto& [loc, mass] : atoms) sum += mass;
  for (const auto& [lo, hi, value] : density) sum += value * (hi - lo);
  return sum;
}

std::optional<std::pair<Rational, Rational>> BoundaryMeasure::support_hull() const {
  std::optional<std::pair<Rational, Rational>> hull;
  auto widen = [&](const Rational& a, const Rational& b) {
    if (!hull) hull = {a, b};
    hull->first = rational_min(hull->first, a);
    hull->second = rational_max(hull->second, b);
  };
  for (const auto& [loc, mass] : atoms) widen(loc, loc);
  for (const auto& [lo, hi, value] : density) widen(lo, hi);
  return hull;
}

BoundaryMeasure stieltjes_measure(const MonotonePwFunction& g) {
  BoundaryMeasure out;
  const auto& ns = g.nodes();
  for (const auto& n : ns) {
    const Rational jump = rational_abs(n.right - n.left);
    if (jump > 0) out.atoms.emplace_back(n.t, jump);
  }
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    const Rational slope =
        rational_abs((ns[i + 1].left - ns[i].right) / (ns[i + 1].t - ns[i].t));
    if (slope == 0) continue;
    // Merge with the previous density piece when it continues seamlessly.
    if (!out.density.empty() && std::get<1>(out.density.back()) == ns[i].t &&
        std::get<2>(out.density.back()) == slope) {
      std::get<1>(out.density.back()) = ns[i + 1].t;
    } else {
      out.density.emplace_back(ns[i].t, ns[i + 1].t, slope);
    }
  }
  return out;
}

BoundaryMeasure right_measure(const DistributionBundle& bundle) {
  BoundaryMeasure r = stieltjes_measure(bundle.R1);
  require(r.total() == bundle.mass, "InternalInvariant",
          "right measure must carry the full mass");
  return r;
}

BoundaryMeasure left_measure(const DistributionBundle& bundle) {
  BoundaryMeasure l = stieltjes_measure(bundle.L1);
  require(l.total() == bundle.mass, "InternalInvariant",
          "left measure must carry the full mass");
  return l;
}

Rational measure_of(const BoundaryMeasure& m, const IntervalSet& a) {
  Rational sum = 0;
  for (const auto& [loc, mass] : m.atoms)
    if (a.contains(loc)) sum += mass;
  for (const auto& [lo, hi, value] : m.density)
    sum += value * total_length(set_intersect(a, IntervalSet(Interval::closed(lo, hi))));
  return sum;
}

Rational stieltjes_integral(const Profile& phi, const BoundaryMeasure& m) {
  const auto hull = m.support_hull();
  if (hull)
    require(phi.domain_lo() <= hull->first && hull->second <= phi.domain_hi(),
            "DomainTooSmall", "profile does not cover the measure support");
  Rational sum = 0;
  for (const auto& [loc, mass] : m.atoms) sum += mass * phi(loc);
  for (const auto& [lo, hi, value] : m.density) {
    std::vector<Rational> cuts{lo, hi};
    for (const auto& n : phi.nodes())
      if (n.first > lo && n.first < hi) cuts.push_back(n.first);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      sum += value * (phi(cuts[i]) + phi(cuts[i + 1])) / 2 * (cuts[i + 1] - cuts[i]);
  }
  return sum;
}

Rational stieltjes_integral_id(const BoundaryMeasure& m) {
  Rational sum = 0;
  for (const auto& [loc, mass] : m.atoms) sum += loc * mass;
  for (const auto& [lo, hi, value] : m.density)
    sum += value * (hi * hi - lo * lo) / 2;
  return sum;
}

RlVerdict rl_equal_criterion(const DistributionBundle& bundle) {
  // L1 + R1 is piecewise affine with breakpoints among those of L1 and R1;
  // "equal to the mass outside a finite set" holds iff it equals the mass at
  // all gap midpoints and one-sidedly around every breakpoint.
  std::vector<Rational> ts;
  for (const auto& n : bundle.L1.nodes()) ts.push_back(n.t);
  for (const auto& n : bundle.R1.nodes()) ts.push_back(n.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> probes;
  probes.push_back(ts.front() - 1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) probes.push_back((ts[i - 1] + ts[i]) / 2);
    probes.push_back(ts[i]);
  }
  probes.push_back(ts.back() + 1);

  for (std::size_t i = 0; i < probes.size(); ++i) {
    const Rational& t = probes[i];
    const Rational l1 = bundle.L1.value(t), r1 = bundle.R1.value(t);
    if (l1 + r1 == bundle.mass) continue;
    // A single breakpoint value off the mass is a null set; only open gaps
    // around the probe matter. Breakpoint probes are at odd positions only
    // if the adjacent midpoints pass, so check one-sided limits there.
    const bool left_bad = bundle.L1.left_limit(t) + bundle.R1.left_limit(t) != bundle.mass;
    const bool right_bad =
        bundle.L1.right_limit(t) + bundle.R1.right_limit(t) != bundle.mass;
    if (!left_bad && !right_bad) continue;  // isolated point, measure zero
    // Build a witness interval around the failing side.
    Rational lo = t, hi = t;
    if (right_bad) {
      hi = t + 1;
      for (const Rational& u : ts)
        if (u > t) { hi = rational_min(hi, u); break; }
    } else {
      lo = t - 1;
      for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        if (*it < t) { lo = rational_max(lo, *it); break; }
    }
    if (lo == hi) { lo = t - 1; hi = t + 1; }
    return {false, Interval::open(lo, hi)};
  }
  return {true, std::nullopt};
}

CheckReport pushforward_check(const Dtm& mu, const PwlFunction& f,
                              const DistributionBundle& bundle, int cases,
                              std::uint64_t seed) {
  CheckReport report{"pushforward", 0, {}};
  const BoundaryMeasure r = right_measure(bundle);
  const BoundaryMeasure l = left_measure(bundle);
  const bool measure_type = mu.is_measure_type();
  const Space line = Space::line();
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const bool open = rng.coin();
    const IntervalSet a = open ? random_open_set(rng, line)
                               : set_difference(whole_space(line), random_open_set(rng, line));
    const IntervalSet pre = preimage(f, a);
    const Rational pulled = mu(pre);
    const Rational ra = measure_of(r, a), la = measure_of(l, a);
    ++report.cases;
    if (pulled > ra || pulled > la) {
      report.failures.push_back({{"A", to_json(a)},
                                 {"preimage", to_json(pre)},
                                 {"mu_preimage", rational_str(pulled)},
                                 {"r_A", rational_str(ra)},
                                 {"l_A", rational_str(la)}});
      continue;
    }
    if (measure_type) {
      const bool closed_ok =
          !open && (mu.space().is_compact() || !a.contains(Rational(0)));
      if (open || closed_ok) {
        if (ra != pulled || la != pulled) {
          report.failures.push_back({{"A", to_json(a)},
                                     {"mu_preimage", rational_str(pulled)},
                                     {"m_A", rational_str(ra)},
                                     {"expected", "equality for measure-type"}});
        }
      }
    }
  }
  return report;
}

namespace {

enum class Side { Left, Right };

Rational one_sided(const MonotonePwFunction& g, Side side, const Rational& t) {
  return side == Side::Left ? g.left_limit(t) : g.right_limit(t);
}

// int over [a, b] of (one-sided values of integrand) d(measure of generator).
Rational stieltjes_one_sided(const MonotonePwFunction& integrand, Side side,
                             const MonotonePwFunction& generator, const Rational& a,
                             const Rational& b) {
  const BoundaryMeasure m = stieltjes_measure(generator);
  Rational sum = 0;
  for (const auto& [loc, mass] : m.atoms)
    if (a <= loc && loc <= b) sum += mass * one_sided(integrand, side, loc);
  for (const auto& [lo, hi, value] : m.density) {
    const Rational clip_lo = rational_max(lo, a);
    const Rational clip_hi = rational_min(hi, b);
    if (clip_lo >= clip_hi) continue;
    std::vector<Rational> cuts{clip_lo, clip_hi};
    for (const auto& n : integrand.nodes())
      if (n.t > clip_lo && n.t < clip_hi) cuts.push_back(n.t);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      sum += value * (integrand.right_limit(cuts[i]) + integrand.left_limit(cuts[i + 1])) /
             2 * (cuts[i + 1] - cuts[i]);
    }
  }
  return sum;
}

}  // namespace

CheckReport integration_by_parts_check(const MonotonePwFunction& F,
                                       const MonotonePwFunction& G, const Rational& a,
                                       const Rational& b) {
  require(a < b, "InvalidInterval", "integration by parts needs a < b");
  require(F.direction() == MonotonePwFunction::Direction::NonDecreasing &&
              G.direction() == MonotonePwFunction::Direction::NonDecreasing,
          "InvalidStepFunction", "integration by parts needs nondecreasing data");
  CheckReport report{"integration_by_parts", 1, {}};
  const Rational lhs = stieltjes_one_sided(G, Side::Right, F, a, b) +
                       stieltjes_one_sided(F, Side::Left, G, a, b);
  const Rational rhs =
      F.right_limit(b) * G.right_limit(b) - F.left_limit(a) * G.left_limit(a);
  if (lhs != rhs) {
    report.failures.push_back({{"lhs", rational_str(lhs)},
                               {"rhs", rational_str(rhs)},
                               {"F", to_json(F)},
                               {"G", to_json(G)},
                               {"a", rational_str(a)},
                               {"b", rational_str(b)}});
  }
  return report;
}

}  // namespace qdtm
