#include "qdtm/measure.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/validation.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {
const Space kLine = Space::line();
}

TEST_CASE("evaluation of the catalog") {
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  CHECK(simple(IntervalSet(Interval::open(-1, 2))) == 1);
  CHECK(simple(IntervalSet(Interval::open(0, 2))) == 0);

  const Dtm leb = Dtm::lebesgue_on(kLine, 0, 1);
  CHECK(leb(IntervalSet(Interval::open(rat(1, 4), rat(3, 4)))) == rat(1, 2));

  const Dtm combo = Dtm::combo(kLine, {{2, Dtm::simple_contains(kLine, 0, 1)},
                                       {1, Dtm::dirac(kLine, 0)}});
  CHECK(combo(IntervalSet(Interval::closed(0, 1))) == 3);

  // closed unbounded sets are admissible
  CHECK(simple(IntervalSet(Interval::below(2, false))) == 1);
  CHECK(leb(IntervalSet({Interval::below(rat(1, 2), false)})) == rat(1, 2));

  CHECK_THROWS_WITH_AS(simple(IntervalSet(Interval::make(0, 1, true, false))),
                       doctest::Contains("NotAdmissibleSet"), Error);
}

TEST_CASE("total mass") {
  CHECK(Dtm::simple_contains(kLine, 0, 1).total_mass() == 1);
  CHECK(Dtm::lebesgue_on(kLine, 0, 1).total_mass() == 1);
  CHECK(Dtm::combo(kLine, {{2, Dtm::simple_contains(kLine, 0, 1)},
                           {3, Dtm::dirac(kLine, 7)}})
            .total_mass() == 5);
}

TEST_CASE("axiom validation passes for the catalog") {
  CHECK(validate_dtm(Dtm::simple_contains(kLine, 0, 1), 200, 11).passed());
  CHECK(validate_dtm(Dtm::lebesgue_on(kLine, 0, 1), 200, 12).passed());
  CHECK(validate_dtm(Dtm::dirac(kLine, rat(1, 2)), 200, 13).passed());
  CHECK(validate_dtm(Dtm::combo(kLine, {{rat(1, 2), Dtm::lebesgue_on(kLine, -1, 1)},
                                        {2, Dtm::simple_contains(kLine, 0, 2)}}),
                     150, 14)
            .passed());
}

TEST_CASE("a disconnected simple set function fails compact additivity") {
  // not constructible as a Dtm; exercised through the generic validator
  const IntervalSet d({Interval::closed(0, 1), Interval::closed(2, 3)});
  const SetFunction broken = [&d](const IntervalSet& a) -> Rational {
    return is_subset(d, a) ? 1 : 0;
  };
  const ValidationReport report = validate_set_function(broken, kLine, 400, 15);
  REQUIRE_FALSE(report.passed());
  CHECK((*report.witness)["check"] == "compact_additivity");

  // the spec'd witness evaluates as claimed
  const IntervalSet c(Interval::closed(0, 1));
  const IntervalSet k(Interval::closed(2, 3));
  CHECK(broken(set_union(c, k)) == 1);
  CHECK(broken(c) == 0);
  CHECK(broken(k) == 0);
}

TEST_CASE("topological measure detector") {
  const ValidationReport simple_report =
      is_topological_measure(Dtm::simple_contains(kLine, 0, 1), 300, 16);
  REQUIRE_FALSE(simple_report.passed());

  // the canonical witness: U = (-1,2), K = [0,1/2]
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  const IntervalSet u(Interval::open(-1, 2));
  const IntervalSet k(Interval::closed(0, rat(1, 2)));
  CHECK(simple(u) == 1);
  CHECK(simple(k) == 0);
  CHECK(simple(set_difference(u, k)) == 0);

  CHECK(is_topological_measure(Dtm::lebesgue_on(kLine, 0, 1), 300, 17).passed());
  CHECK(is_topological_measure(Dtm::dirac(kLine, rat(1, 2)), 300, 18).passed());
}

TEST_CASE("eval is monotone and conic in the measure") {
  Rng rng(19);
  for (int i = 0; i < 1000; ++i) {
    const Dtm mu = random_catalog_measure(rng, kLine);
    const IntervalSet b = random_open_set(rng, kLine);
    const IntervalSet a = set_intersect(b, random_open_set(rng, kLine));
    CHECK(mu(a) <= mu(b));
    CHECK(mu(IntervalSet()) == 0);

    const Dtm nu = random_catalog_measure(rng, kLine);
    const Rational ca(rng.int_in(0, 6), 2), cb(rng.int_in(0, 6), 2);
    const Dtm mix = Dtm::combo(kLine, {{ca, mu}, {cb, nu}});
    CHECK(mix(b) == ca * mu(b) + cb * nu(b));
  }
}

TEST_CASE("simple measure on compacts is the subset test") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    auto [lo, hi] = random_window(rng, kLine);
    const Dtm mu = Dtm::simple_contains(kLine, lo, hi);
    const IntervalSet k = random_compact_set(rng, kLine);
    CHECK((mu(k) == 1) == is_subset(IntervalSet(Interval::closed(lo, hi)), k));
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_WITH_AS(Dtm::combo(kLine, {{rat(-1), Dtm::dirac(kLine, 0)}}),
                       doctest::Contains("InvalidMeasure"), Error);
  const Space box = Space::compact(0, 1);
  CHECK_THROWS_AS(Dtm::dirac(box, 2), Error);
  CHECK_THROWS_AS(Dtm::simple_contains(box, 0, 2), Error);
}
