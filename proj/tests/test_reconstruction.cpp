#include "qdtm/reconstruction.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/suites.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {

const Space kLine = Space::line();

IntervalSet compact_inside(const IntervalSet& u) {
  std::vector<Interval> parts;
  for (const Interval& p : u.parts()) {
    if (!p.lo || !p.hi) continue;
    const Rational len = *p.hi - *p.lo;
    if (len <= rat(1, 8)) continue;
    parts.push_back(Interval::closed(*p.lo + len / 4, *p.hi - len / 4));
  }
  return IntervalSet(parts);
}

}  // namespace

TEST_CASE("plateau construction") {
  const PwlFunction p = plateau_inside(kLine, IntervalSet(Interval::open(-1, 2)), rat(1, 4));
  CHECK(p(rat(-3, 4)) == 1);
  CHECK(p(rat(7, 4)) == 1);
  CHECK(p(0) == 1);
  CHECK(p(-1) == 0);
  CHECK(p(2) == 0);
  CHECK(is_subset(support(p), IntervalSet(Interval::open(-1, 2))));

  const PwlFunction two = plateau_inside(
      kLine, IntervalSet({Interval::open(0, 1), Interval::open(2, 3)}), rat(1, 4));
  CHECK(two(rat(1, 2)) == 1);
  CHECK(two(rat(5, 2)) == 1);
  CHECK(two(rat(3, 2)) == 0);

  // short part: capped tent
  const PwlFunction tent =
      plateau_inside(kLine, IntervalSet(Interval::open(0, rat(1, 4))), rat(1, 4));
  CHECK(range_bounds(tent).second == rat(1, 2));  // peak = len / (2 eps)
}

TEST_CASE("plateau families are monotone along the schedule") {
  Rng rng(101);
  const RampSchedule schedule = RampSchedule::standard();
  for (int i = 0; i < 100; ++i) {
    const IntervalSet u = random_open_set(rng, kLine);
    const IntervalSet k = random_compact_set(rng, kLine);
    for (std::size_t j = 1; j < schedule.widths.size(); ++j) {
      const PwlFunction wide = plateau_inside(kLine, u, schedule.widths[j - 1]);
      const PwlFunction tight = plateau_inside(kLine, u, schedule.widths[j]);
      CHECK(combine(wide, tight, CombineOp::Max) == tight);  // pointwise <=

      const PwlFunction over_wide = plateau_over(kLine, k, schedule.widths[j - 1]);
      const PwlFunction over_tight = plateau_over(kLine, k, schedule.widths[j]);
      CHECK(combine(over_wide, over_tight, CombineOp::Min) == over_tight);
      CHECK(range_bounds(over_tight).second <= 1);
      // over-plateaus dominate the indicator of k
      for (const Interval& part : k.parts()) {
        CHECK(over_tight(*part.lo) == 1);
        CHECK(over_tight(*part.hi) == 1);
      }
    }
  }
}

TEST_CASE("open reconstruction of the simple measure") {
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  const FunctionalHandle rho = FunctionalHandle::induced_R(simple);
  const RampSchedule schedule = RampSchedule::standard();

  const ReconstructionResult hit =
      reconstruct_open(rho, IntervalSet(Interval::open(rat(-1, 2), rat(3, 2))), schedule);
  CHECK(hit.value == 1);
  CHECK(hit.kind == ReconstructionResult::Kind::Stabilized);
  CHECK(hit.stabilized_at == rat(1, 4));

  const ReconstructionResult miss =
      reconstruct_open(rho, IntervalSet(Interval::open(0, 2)), schedule);
  CHECK(miss.value == 0);  // every admissible witness vanishes at 0
}

TEST_CASE("open reconstruction of lebesgue extrapolates") {
  const Dtm leb = Dtm::lebesgue_on(kLine, 0, 1);
  const FunctionalHandle rho = FunctionalHandle::induced_R(leb);
  const ReconstructionResult rec =
      reconstruct_open(rho, IntervalSet(Interval::open(0, 1)), RampSchedule::standard());
  CHECK(rec.value == 1);
  CHECK(rec.kind == ReconstructionResult::Kind::Extrapolated);
  CHECK(rec.residual == 0);
  // flat top loses 2 eps of length, the two ramps win back eps/2 together
  const auto& [w, v] = rec.samples.back();
  CHECK(v == 1 - 3 * w / 2);
}

TEST_CASE("compact reconstruction") {
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  const FunctionalHandle rho = FunctionalHandle::induced_R(simple);
  const RampSchedule schedule = RampSchedule::standard();

  CHECK(reconstruct_compact(rho, IntervalSet(Interval::closed(0, 1)), schedule).value == 1);
  // K = [0, 1/2]: admissible witnesses may dip after 1/2, so the inf is 0
  CHECK(reconstruct_compact(rho, IntervalSet(Interval::closed(0, rat(1, 2))), schedule)
            .value == 0);

  const Dtm dirac = Dtm::dirac(kLine, rat(1, 2));
  CHECK(reconstruct_compact(FunctionalHandle::induced_R(dirac),
                            IntervalSet(Interval::closed(0, 1)), schedule)
            .value == 1);
}

TEST_CASE("round trip across the catalog") {
  Rng rng(103);
  const RampSchedule schedule = RampSchedule::standard();
  for (const Dtm& mu : line_catalog()) {
    std::vector<IntervalSet> sets;
    for (int i = 0; i < 12; ++i)
      sets.push_back(i % 2 == 0 ? random_open_set(rng, kLine)
                                : random_compact_set(rng, kLine));
    const CheckReport report = round_trip_check(mu, sets, schedule);
    CHECK(report.passed());
  }
}

TEST_CASE("nested and monotone reconstructed values") {
  Rng rng(107);
  const RampSchedule schedule = RampSchedule::standard();
  const auto catalog = line_catalog();
  for (int i = 0; i < 40; ++i) {
    const Dtm& mu = catalog[rng.word() % catalog.size()];
    const FunctionalHandle rho = FunctionalHandle::induced_R(mu);
    const IntervalSet u = random_open_set(rng, kLine);
    const IntervalSet k = compact_inside(u);
    if (k.empty()) continue;
    const Rational vu = reconstruct_open(rho, u, schedule).value;
    const Rational vk = reconstruct_compact(rho, k, schedule).value;
    CHECK(vk <= vu);
  }
}

TEST_CASE("norm estimates equal the total mass") {
  const RampSchedule schedule = RampSchedule::standard();
  for (const Dtm& mu : line_catalog()) {
    CHECK(norm_estimate(FunctionalHandle::induced_R(mu), schedule) == mu.total_mass());
  }
  const Dtm five = Dtm::combo(kLine, {{5, Dtm::dirac(kLine, 0)}});
  CHECK(norm_estimate(FunctionalHandle::induced_R(five), schedule) == 5);

  // compact space: the sup is rho(1) immediately
  const Space box = Space::compact(0, 1);
  const Dtm leb = Dtm::lebesgue_on(box, 0, 1);
  CHECK(norm_estimate(FunctionalHandle::induced_R(leb), schedule) == 1);
}

TEST_CASE("non-monotone functionals are rejected") {
  const FunctionalHandle bad = FunctionalHandle::user(
      kLine, DomainTag::Cc, "oscillating",
      [](const PwlFunction& f) {
        // grows as the support shrinks: contradicts the sup structure
        const auto s = support(f);
        return s.empty() ? Rational(0) : Rational(1) / total_length(s);
      },
      true);
  CHECK_THROWS_WITH_AS(
      reconstruct_open(bad, IntervalSet(Interval::open(0, 1)), RampSchedule::standard()),
      doctest::Contains("NotMonotoneInput"), Error);
}
