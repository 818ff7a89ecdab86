#include "qdtm/randgen.hpp"

#include <algorithm>
#include <tuple>

namespace qdtm {

std::pair<Rational, Rational> random_window(Rng& rng, const Space& space) {
  for (;;) {
    Rational a = rng.grid_point(space);
    Rational b = rng.grid_point(space);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    return {a, b};
  }
}

IntervalSet random_compact_set(Rng& rng, const Space& space, int max_parts) {
  const int parts = static_cast<int>(rng.int_in(1, max_parts));
  std::vector<Interval> pieces;
  for (int i = 0; i < parts; ++i) {
    if (rng.int_in(0, 7) == 0) {
      pieces.push_back(Interval::point(rng.grid_point(space)));
    } else {
      auto [a, b] = random_window(rng, space);
      pieces.push_back(Interval::closed(a, b));
    }
  }
  return IntervalSet(std::move(pieces));
}

IntervalSet random_open_set(Rng& rng, const Space& space, int max_parts) {
  const int parts = static_cast<int>(rng.int_in(1, max_parts));
  std::vector<Interval> pieces;
  for (int i = 0; i < parts; ++i) {
    auto [a, b] = random_window(rng, space);
    if (space.is_line() && rng.int_in(0, 7) == 0) {
      pieces.push_back(rng.coin() ? Interval::below(b, true) : Interval::above(a, true));
    } else {
      // On a compact space endpoints at the boundary stay closed: the set is
      // still relatively open there.
      bool lo_open = true, hi_open = true;
      if (space.is_compact() && a == space.lo()) lo_open = false;
      if (space.is_compact() && b == space.hi()) hi_open = false;
      pieces.push_back(Interval::make(a, b, lo_open, hi_open));
    }
  }
  IntervalSet out(std::move(pieces));
  return out;
}

IntervalSet random_admissible_set(Rng& rng, const Space& space) {
  switch (rng.int_in(0, 3)) {
    case 0: return random_compact_set(rng, space);
    case 1: return random_open_set(rng, space);
    case 2: {  // closed: complement of an open set
      IntervalSet u = random_open_set(rng, space);
      return set_difference(whole_space(space), u);
    }
    default: return rng.coin() ? whole_space(space) : IntervalSet();
  }
}

PwlFunction random_pwl(Rng& rng, const Space& space, const PwlOptions& opts) {
  std::vector<Rational> xs;
  const int interior = static_cast<int>(rng.int_in(1, opts.max_interior_nodes));
  for (int i = 0; i < interior; ++i) xs.push_back(rng.grid_point(space, opts.max_pow));
  if (space.is_compact()) {
    xs.push_back(space.lo());
    xs.push_back(space.hi());
  } else {
    xs.push_back(rng.grid_point(space, opts.max_pow) - 4);
    xs.push_back(rng.grid_point(space, opts.max_pow) + 4);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational y = Rational(rng.int_in(opts.y_lo * 4, opts.y_hi * 4), 4);
    if (opts.nonnegative && y < 0) y = -y;
    if (opts.range01) {
      if (y < 0) y = -y;
      while (y > 1) y -= 1;
    }
    nodes.push_back({xs[i], y});
  }
  if (space.is_line()) {
    nodes.front().second = 0;
    nodes.back().second = 0;
  }
  PwlFunction f(space, std::move(nodes));
  if (f.is_zero() && space.is_line()) {
    // Zero draws make degenerate cases; keep a small tent instead, most
    // callers want something to integrate.
    if (rng.int_in(0, 3) != 0)
      return PwlFunction(space, {{0, 0}, {1, Rational(1, 2)}, {2, 0}});
  }
  return f;
}

std::pair<PwlFunction, PwlFunction> random_dominated_pair(Rng& rng, const Space& space) {
  PwlOptions opts;
  opts.nonnegative = true;
  PwlFunction f = random_pwl(rng, space, opts);
  PwlFunction h = random_pwl(rng, space, opts);
  return {f, combine(f, h, CombineOp::Min)};
}

namespace {

PwlFunction tent_between(const Space& space, const Rational& a, const Rational& b,
                         const Rational& peak) {
  const Rational mid = (a + b) / 2;
  std::vector<Breakpoint> nodes{{a, 0}, {mid, peak}, {b, 0}};
  if (space.is_compact()) {
    if (a != space.lo()) nodes.insert(nodes.begin(), {space.lo(), 0});
    if (b != space.hi()) nodes.push_back({space.hi(), 0});
  }
  return PwlFunction(space, std::move(nodes));
}

}  // namespace

std::pair<PwlFunction, PwlFunction> random_disjoint_pair(Rng& rng, const Space& space) {
  for (;;) {
    Rational a1, b1, a2, b2;
    if (rng.coin()) {
      // Split the whole box at a grid point: the two supports straddle it,
      // which also makes both sides meet any fixed landmark region often.
      const Rational lo = space.is_line() ? Rational(-4) : space.lo();
      const Rational hi = space.is_line() ? Rational(4) : space.hi();
      const Rational m = rng.grid_point(space);
      if (m - lo < rat(1, 8) || hi - m < rat(1, 4)) continue;
      a1 = lo;
      b1 = m;
      a2 = m + rat(1, 16);
      b2 = hi;
    } else {
      std::tie(a1, b1) = random_window(rng, space);
      std::tie(a2, b2) = random_window(rng, space);
    }
    if (!(b1 < a2)) continue;  // strict gap keeps the closed supports disjoint
    const Rational p1(rng.int_in(1, 8), 4), p2(rng.int_in(1, 8), 4);
    return {tent_between(space, a1, b1, p1), tent_between(space, a2, b2, p2)};
  }
}

std::pair<PwlFunction, PwlFunction> random_pos_neg_orthogonal(Rng& rng,
                                                              const Space& space) {
  auto [f, g] = random_disjoint_pair(rng, space);
  if (rng.coin()) return {f, scale(g, -1)};
  return {g, scale(f, -1)};
}

MonotoneProfile random_monotone_profile(Rng& rng, const Rational& lo, const Rational& hi,
                                        ProfileDirection direction, bool anchor_zero) {
  std::vector<Rational> xs{lo, hi};
  if (anchor_zero && lo < 0 && 0 < hi) xs.push_back(0);
  const int extra = static_cast<int>(rng.int_in(1, 3));
  for (int i = 0; i < extra; ++i) {
    const Rational t = lo + (hi - lo) * Rational(rng.int_in(0, 16), 16);
    xs.push_back(t);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> nodes;
  Rational y = 0;
  for (const Rational& x : xs) {
    nodes.push_back({x, y});
    y += Rational(rng.int_in(0, 8), 4);
  }
  if (anchor_zero) {
    // Shift so the profile vanishes at 0 (0 is a node when it lies inside
    // the domain; outside, anchor at the nearest boundary value).
    Rational at0 = nodes.front().second;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].first == 0) at0 = nodes[i].second;
    if (nodes.front().first > 0) at0 = nodes.front().second;
    if (nodes.back().first < 0) at0 = nodes.back().second;
    for (auto& n : nodes) n.second -= at0;
  }
  if (direction == ProfileDirection::NonIncreasing)
    for (auto& n : nodes) n.second = -n.second;
  return MonotoneProfile(direction, std::move(nodes));
}

Profile random_profile(Rng& rng, const Rational& lo, const Rational& hi,
                       bool anchor_zero) {
  std::vector<Rational> xs{lo, hi};
  if (anchor_zero && lo < 0 && 0 < hi) xs.push_back(0);
  const int extra = static_cast<int>(rng.int_in(1, 4));
  for (int i = 0; i < extra; ++i)
    xs.push_back(lo + (hi - lo) * Rational(rng.int_in(0, 16), 16));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> nodes;
  for (const Rational& x : xs)
    nodes.push_back({x, Rational(rng.int_in(-8, 8), 4)});
  Rational at0 = nodes.front().second;
  if (anchor_zero) {
    for (const auto& n : nodes)
      if (n.first == 0) at0 = n.second;
    if (nodes.front().first > 0) at0 = nodes.front().second;
    if (nodes.back().first < 0) at0 = nodes.back().second;
    for (auto& n : nodes) n.second -= at0;
  }
  return Profile(std::move(nodes));
}

Dtm random_catalog_measure(Rng& rng, const Space& space) {
  switch (rng.int_in(0, 4)) {
    case 0: {
      auto [a, b] = random_window(rng, space);
      return Dtm::simple_contains(space, a, b);
    }
    case 1: return Dtm::dirac(space, rng.grid_point(space));
    case 2: {
      auto [a, b] = random_window(rng, space);
      return Dtm::lebesgue_on(space, a, b);
    }
    case 3: {
      auto [a, b] = random_window(rng, space);
      std::vector<std::pair<Rational, Dtm>> terms;
      terms.emplace_back(Rational(rng.int_in(1, 4)), Dtm::simple_contains(space, a, b));
      terms.emplace_back(Rational(rng.int_in(1, 8), 2), Dtm::dirac(space, rng.grid_point(space)));
      return Dtm::combo(space, std::move(terms));
    }
    default: return random_measure_type(rng, space);
  }
}

Dtm random_measure_type(Rng& rng, const Space& space) {
  switch (rng.int_in(0, 2)) {
    case 0: return Dtm::dirac(space, rng.grid_point(space));
    case 1: {
      auto [a, b] = random_window(rng, space);
      return Dtm::lebesgue_on(space, a, b);
    }
    default: {
      auto [a, b] = random_window(rng, space);
      std::vector<std::pair<Rational, Dtm>> terms;
      terms.emplace_back(Rational(rng.int_in(1, 8), 2), Dtm::lebesgue_on(space, a, b));
      terms.emplace_back(Rational(rng.int_in(1, 4)), Dtm::dirac(space, rng.grid_point(space)));
      return Dtm::combo(space, std::move(terms));
    }
  }
}

}  // namespace qdtm
