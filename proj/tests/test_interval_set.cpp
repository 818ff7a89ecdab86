#include "qdtm/interval_set.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {
constexpr int kSweepCases = 1000;
}

TEST_CASE("union keeps open endpoints apart and merges touching closed ones") {
  const IntervalSet a(Interval::open(0, 1));
  const IntervalSet b(Interval::open(1, 2));
  const IntervalSet two = set_union(a, b);
  REQUIRE(two.parts().size() == 2);
  CHECK(two.parts()[0] == Interval::open(0, 1));
  CHECK(two.parts()[1] == Interval::open(1, 2));

  const IntervalSet c(Interval::make(0, 1, true, false));   // (0,1]
  const IntervalSet d(Interval::make(1, 2, false, true));   // [1,2)
  const IntervalSet merged = set_union(c, d);
  REQUIRE(merged.parts().size() == 1);
  CHECK(merged.parts()[0] == Interval::open(0, 2));

  CHECK(set_union(IntervalSet(), IntervalSet(Interval::closed(0, 1))) ==
        IntervalSet(Interval::closed(0, 1)));
}

TEST_CASE("intersection") {
  CHECK(set_intersect(IntervalSet(Interval::closed(0, 2)),
                      IntervalSet(Interval::open(1, 3))) ==
        IntervalSet(Interval::make(1, 2, true, false)));
  CHECK(set_intersect(IntervalSet(Interval::closed(0, 1)),
                      IntervalSet(Interval::closed(2, 3)))
            .empty());
}

TEST_CASE("complement within ambient") {
  const IntervalSet inner(Interval::closed(0, 1));
  const IntervalSet comp = complement_within(inner, Interval::open(-1, 2));
  REQUIRE(comp.parts().size() == 2);
  CHECK(comp.parts()[0] == Interval::open(-1, 0));
  CHECK(comp.parts()[1] == Interval::open(1, 2));

  CHECK(complement_within(IntervalSet(), Interval::closed(0, 1)) ==
        IntervalSet(Interval::closed(0, 1)));

  const IntervalSet open_piece(Interval::open(rat(-1, 2), rat(3, 2)));
  const IntervalSet cob = complement_within(open_piece, Interval::whole_line());
  REQUIRE(cob.parts().size() == 2);
  CHECK(cob.parts()[0] == Interval::below(rat(-1, 2), false));
  CHECK(cob.parts()[1] == Interval::above(rat(3, 2), false));

  CHECK_THROWS_WITH_AS(
      complement_within(IntervalSet(Interval::closed(0, 5)), Interval::closed(0, 1)),
      doctest::Contains("NotContained"), Error);
}

TEST_CASE("subset checks respect endpoint openness") {
  CHECK(is_subset(IntervalSet(Interval::closed(0, 1)),
                  IntervalSet(Interval::open(-1, 2))));
  CHECK_FALSE(is_subset(IntervalSet(Interval::closed(0, 1)),
                        IntervalSet(Interval::open(0, 2))));
  CHECK(is_subset(IntervalSet(), IntervalSet(Interval::point(0))));
}

TEST_CASE("topology relative to the space") {
  const Space line = Space::line();
  const Space box = Space::compact(0, 2);

  CHECK(is_compact(IntervalSet({Interval::closed(0, 1), Interval::closed(2, 3)}), line));
  CHECK(is_open(IntervalSet(Interval::open(0, 1)), line));
  CHECK_FALSE(is_compact(IntervalSet(Interval::open(0, 1)), line));

  const IntervalSet half(Interval::make(0, 1, false, true));  // [0,1) in [0,2]
  CHECK(is_open(half, box));
  CHECK_FALSE(is_compact(half, box));
  CHECK_FALSE(is_open(half, line));

  CHECK(is_closed(IntervalSet(Interval::below(0, false)), line));
  CHECK_FALSE(is_closed(IntervalSet(Interval::below(0, true)), line));
  CHECK(is_admissible(whole_space(line), line));
  CHECK(is_admissible(whole_space(box), box));
}

TEST_CASE("canonicalization is a fixed point") {
  Rng rng(41);
  const Space line = Space::line();
  for (int i = 0; i < kSweepCases; ++i) {
    const IntervalSet a = random_admissible_set(rng, line);
    CHECK(IntervalSet(a.parts()) == a);
  }
}

TEST_CASE("de morgan and subset/intersect agreement") {
  Rng rng(42);
  const Space line = Space::line();
  const Interval ambient = Interval::whole_line();
  for (int i = 0; i < kSweepCases; ++i) {
    const IntervalSet a = random_admissible_set(rng, line);
    const IntervalSet b = random_admissible_set(rng, line);
    CHECK(complement_within(set_union(a, b), ambient) ==
          set_intersect(complement_within(a, ambient), complement_within(b, ambient)));
    CHECK(is_subset(a, b) == (set_intersect(a, b) == a));
    CHECK(set_intersect(a, a) == a);
    CHECK(set_union(a, b) == set_union(b, a));
  }
}

TEST_CASE("length") {
  CHECK(total_length(IntervalSet({Interval::closed(0, 1), Interval::open(2, 4)})) ==
        rat(3));
  CHECK(total_length(IntervalSet(Interval::point(5))) == 0);
}
