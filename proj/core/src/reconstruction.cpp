#include "qdtm/reconstruction.hpp"

#include "qdtm/error.hpp"
#include "qdtm/serialization.hpp"

#include <algorithm>

namespace qdtm {

RampSchedule RampSchedule::standard() {
  RampSchedule s;
  for (int k = 2; k <= 10; ++k) s.widths.push_back(Rational(1, std::int64_t(1) << k));
  return s;
}

namespace {

void append_bump_inside(const Interval& part, const Rational& eps,
                        std::vector<Breakpoint>* nodes) {
  // Bounded open part (c, d): support inset by eps/2, flat top inset by eps.
  // For short parts a capped tent with peak len/(2 eps).
  const Rational bound = Rational(1) / eps;
  if (part.lo && part.hi) {
    const Rational c = *part.lo, d = *part.hi;
    const Rational len = d - c;
    if (len > 2 * eps) {
      nodes->push_back({c + eps / 2, 0});
      nodes->push_back({c + eps, 1});
      nodes->push_back({d - eps, 1});
      nodes->push_back({d - eps / 2, 0});
    } else {
      Rational peak = len / (2 * eps);
      if (peak > 1) peak = 1;
      nodes->push_back({c + len / 4, 0});
      nodes->push_back({(c + d) / 2, peak});
      nodes->push_back({d - len / 4, 0});
    }
    return;
  }
  if (!part.lo && !part.hi) {
    nodes->push_back({-bound - eps, 0});
    nodes->push_back({-bound, 1});
    nodes->push_back({bound, 1});
    nodes->push_back({bound + eps, 0});
    return;
  }
  if (!part.lo) {
    const Rational d = *part.hi;
    const Rational b = rational_max(bound, rational_abs(d) + 2);
    nodes->push_back({-b - eps, 0});
    nodes->push_back({-b, 1});
    nodes->push_back({d - eps, 1});
    nodes->push_back({d - eps / 2, 0});
    return;
  }
  const Rational c = *part.lo;
  const Rational b = rational_max(bound, rational_abs(c) + 2);
  nodes->push_back({c + eps / 2, 0});
  nodes->push_back({c + eps, 1});
  nodes->push_back({b, 1});
  nodes->push_back({b + eps, 0});
}

// One part of a relatively open subset of a compact space: endpoints equal
// to the space boundary carry value 1 (no inset needed there).
void append_bump_inside_compact(const Space& space, const Interval& part,
                                const Rational& eps, std::vector<Breakpoint>* nodes) {
  const Rational c = *part.lo, d = *part.hi;
  const bool pinned_lo = c == space.lo() && !part.lo_open;
  const bool pinned_hi = d == space.hi() && !part.hi_open;
  const Rational len = d - c;
  const Rational inset = rational_min(eps, len / 4);
  std::vector<Breakpoint> local;
  if (pinned_lo) {
    local.push_back({c, 1});
  } else {
    local.push_back({c + inset / 2, 0});
    local.push_back({c + inset, 1});
  }
  if (pinned_hi) {
    local.push_back({d, 1});
  } else {
    local.push_back({d - inset, 1});
    local.push_back({d - inset / 2, 0});
  }
  // Degenerate node collisions (very short parts) collapse to a tent.
  std::sort(local.begin(), local.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.first < b.first; });
  Rational last = local.front().first - 1;
  for (const auto& n : local) {
    if (n.first == last) continue;
    nodes->push_back(n);
    last = n.first;
  }
}

PwlFunction from_raw_nodes(const Space& space, std::vector<Breakpoint> nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.first < b.first; });
  // Merge duplicate x (touching ramps of adjacent parts share a zero node).
  std::vector<Breakpoint> merged;
  for (const auto& n : nodes) {
    if (!merged.empty() && merged.back().first == n.first) {
      merged.back().second = rational_max(merged.back().second, n.second);
      continue;
    }
    merged.push_back(n);
  }
  if (space.is_compact()) {
    if (merged.front().first != space.lo())
      merged.insert(merged.begin(), {space.lo(), 0});
    if (merged.back().first != space.hi()) merged.push_back({space.hi(), 0});
  }
  return PwlFunction(space, std::move(merged));
}

}  // namespace

PwlFunction plateau_inside(const Space& space, const IntervalSet& u, const Rational& eps) {
  require(eps > 0, "InvalidInterval", "plateau width must be positive");
  if (u.empty()) return zero_function(space);
  std::vector<Breakpoint> nodes;
  for (const Interval& part : u.parts()) {
    if (space.is_compact()) {
      append_bump_inside_compact(space, part, eps, &nodes);
    } else {
      append_bump_inside(part, eps, &nodes);
    }
  }
  return from_raw_nodes(space, std::move(nodes));
}

PwlFunction plateau_over(const Space& space, const IntervalSet& k, const Rational& eps) {
  require(eps > 0, "InvalidInterval", "plateau width must be positive");
  if (k.empty()) return zero_function(space);
  PwlFunction out = zero_function(space);
  for (const Interval& part : k.parts()) {
    const Rational p = *part.lo, q = *part.hi;
    std::vector<Breakpoint> nodes;
    if (space.is_compact()) {
      const Rational lo = rational_max(p - eps, space.lo());
      const Rational hi = rational_min(q + eps, space.hi());
      if (lo != p) nodes.push_back({lo, p - eps < space.lo()
                                            ? (space.lo() - (p - eps)) / eps
                                            : Rational(0)});
      nodes.push_back({p, 1});
      if (q != p) nodes.push_back({q, 1});
      if (hi != q) nodes.push_back({hi, q + eps > space.hi()
                                            ? ((q + eps) - space.hi()) / eps
                                            : Rational(0)});
      if (nodes.front().first != space.lo())
        nodes.insert(nodes.begin(), {space.lo(), 0});
      if (nodes.back().first != space.hi()) nodes.push_back({space.hi(), 0});
    } else {
      nodes.push_back({p - eps, 0});
      nodes.push_back({p, 1});
      if (q != p) nodes.push_back({q, 1});
      nodes.push_back({q + eps, 0});
    }
    out = combine(out, PwlFunction(space, std::move(nodes)), CombineOp::Max);
  }
  return out;
}

namespace {

ReconstructionResult drive(const FunctionalHandle& rho, const RampSchedule& schedule,
                           bool increasing,
                           const std::function<PwlFunction(const Rational&)>& witness) {
  require(schedule.widths.size() >= 3, "InvalidSchedule",
          "schedule needs at least three widths");
  for (std::size_t i = 1; i < schedule.widths.size(); ++i)
    require(schedule.widths[i] < schedule.widths[i - 1] && schedule.widths[i] > 0,
            "InvalidSchedule", "widths must be positive and strictly decreasing");

  ReconstructionResult result;
  for (const Rational& eps : schedule.widths) {
    const Rational v = rho(witness(eps));
    if (!result.samples.empty()) {
      const Rational& prev = result.samples.back().second;
      const bool ok = increasing ? prev <= v : v <= prev;
      require(ok, "NotMonotoneInput",
              "samples moved against the sup/inf direction; the functional is "
              "not monotone on nonnegative functions");
    }
    result.samples.emplace_back(eps, v);
  }

  // Certify from the tail: an early pair of equal samples can be a plateau
  // that has not yet reached the massive region, so only agreement at the
  // narrow end of the schedule counts as stabilization.
  const std::size_t k = result.samples.size();
  if (result.samples[k - 1].second == result.samples[k - 2].second) {
    const Rational& final_value = result.samples[k - 1].second;
    std::size_t first = k - 1;
    while (first > 0 && result.samples[first - 1].second == final_value) --first;
    result.value = final_value;
    result.kind = ReconstructionResult::Kind::Stabilized;
    result.stabilized_at = result.samples[first].first;
    return result;
  }
  const auto& [w0, v0] = result.samples[k - 3];
  const auto& [w1, v1] = result.samples[k - 2];
  const auto& [w2, v2] = result.samples[k - 1];
  result.kind = ReconstructionResult::Kind::Extrapolated;
  result.slope = (v1 - v0) / (w1 - w0);
  result.intercept = v0 - result.slope * w0;
  result.residual = v2 - (result.intercept + result.slope * w2);
  if (result.residual != 0) {
    // Fit is not affine yet; keep the most local estimate and report the
    // residual rather than silently trusting it.
    result.slope = (v2 - v1) / (w2 - w1);
    result.intercept = v1 - result.slope * w1;
  }
  result.value = result.intercept;
  return result;
}

}  // namespace

ReconstructionResult reconstruct_open(const FunctionalHandle& rho, const IntervalSet& u,
                                      const RampSchedule& schedule) {
  require(is_open(u, rho.space()), "NotAdmissibleSet", "reconstruct_open needs an open set");
  return drive(rho, schedule, /*increasing=*/true,
               [&](const Rational& eps) { return plateau_inside(rho.space(), u, eps); });
}

ReconstructionResult reconstruct_compact(const FunctionalHandle& rho,
                                         const IntervalSet& k,
                                         const RampSchedule& schedule) {
  require(is_compact(k, rho.space()), "NotAdmissibleSet",
          "reconstruct_compact needs a compact set");
  return drive(rho, schedule, /*increasing=*/false,
               [&](const Rational& eps) { return plateau_over(rho.space(), k, eps); });
}

ReconstructionResult reconstruct_set(const FunctionalHandle& rho, const IntervalSet& a,
                                     const RampSchedule& schedule) {
  if (is_compact(a, rho.space())) return reconstruct_compact(rho, a, schedule);
  return reconstruct_open(rho, a, schedule);
}

CheckReport round_trip_check(const Dtm& mu, const std::vector<IntervalSet>& sets,
                             const RampSchedule& schedule) {
  CheckReport report{"round_trip", 0, {}};
  const FunctionalHandle rho = FunctionalHandle::induced_R(mu);
  for (const IntervalSet& a : sets) {
    const ReconstructionResult rec = reconstruct_set(rho, a, schedule);
    const Rational expected = mu(a);
    ++report.cases;
    if (rec.value != expected) {
      report.failures.push_back(
          {{"set", to_json(a)},
           {"expected", rational_str(expected)},
           {"reconstructed", rational_str(rec.value)},
           {"certificate", rec.kind == ReconstructionResult::Kind::Stabilized
                               ? "stabilized"
                               : "extrapolated"}});
    }
  }
  return report;
}

Rational norm_estimate(const FunctionalHandle& rho, const RampSchedule& schedule) {
  return reconstruct_open(rho, whole_space(rho.space()), schedule).value;
}

}  // namespace qdtm
