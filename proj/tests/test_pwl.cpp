#include "qdtm/pwl.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {

constexpr int kSweepCases = 1000;

PwlFunction hat_line() {
  return PwlFunction(Space::line(), {{-1, 0}, {0, 1}, {1, 0}});
}

PwlFunction baeq_fn() {
  return PwlFunction(Space::line(), {{-1, 0}, {0, 2}, {1, 1}, {2, 1}, {3, 0}});
}

}  // namespace

TEST_CASE("evaluate") {
  const PwlFunction f = hat_line();
  CHECK(f(rat(1, 2)) == rat(1, 2));
  CHECK(f(rat(5)) == 0);
  CHECK(baeq_fn()(rat(3, 2)) == 1);

  const Space box = Space::compact(0, 1);
  const PwlFunction id(box, {{0, 0}, {1, 1}});
  CHECK_THROWS_WITH_AS(id(rat(2)), doctest::Contains("OutOfDomain"), Error);
}

TEST_CASE("superlevel sets") {
  const PwlFunction f = hat_line();
  CHECK(superlevel(f, rat(1, 2), true) ==
        IntervalSet(Interval::open(rat(-1, 2), rat(1, 2))));
  CHECK(superlevel(f, 0, true) == IntervalSet(Interval::open(-1, 1)));
  CHECK(superlevel(f, 0, false) == IntervalSet(Interval::whole_line()));
  // flat-top tent: f >= 1 solved by hand across the four segments
  CHECK(superlevel(baeq_fn(), 1, false) ==
        IntervalSet(Interval::closed(rat(-1, 2), rat(2))));
  // negative thresholds produce co-bounded sets
  const IntervalSet co = superlevel(f, rat(-1), true);
  CHECK(co == IntervalSet(Interval::whole_line()));
  const IntervalSet dipped = superlevel(scale(f, -1), rat(-1, 2), true);
  REQUIRE(dipped.parts().size() == 2);
  CHECK(dipped.parts()[0] == Interval::below(rat(-1, 2), true));
  CHECK(dipped.parts()[1] == Interval::above(rat(1, 2), true));
}

TEST_CASE("combine, scale, positive parts") {
  const PwlFunction f = hat_line();
  CHECK(combine(f, f, CombineOp::Add) == scale(f, 2));

  const Space box = Space::compact(-1, 1);
  const PwlFunction g(box, {{-1, 0}, {0, 1}, {1, 0}});
  const PwlFunction clipped = combine(g, constant_function(box, rat(1, 2)), CombineOp::Min);
  CHECK(clipped(0) == rat(1, 2));
  CHECK(clipped(rat(-3, 4)) == rat(1, 4));
  CHECK(clipped(rat(1, 4)) == rat(1, 2));

  // sign-crossing enumeration done by hand
  const PwlFunction mixed(Space::line(), {{-1, 0}, {0, -1}, {1, 0}, {2, 1}, {3, 0}});
  const PwlFunction plus = pos_part(mixed);
  CHECK(plus(rat(0)) == 0);
  CHECK(plus(rat(1, 2)) == 0);
  CHECK(plus(rat(2)) == 1);
  CHECK(combine(plus, scale(neg_part(mixed), -1), CombineOp::Add) == mixed);
}

TEST_CASE("min plus max is add") {
  Rng rng(7);
  const Space line = Space::line();
  for (int i = 0; i < 300; ++i) {
    const PwlFunction f = random_pwl(rng, line, {});
    const PwlFunction g = random_pwl(rng, line, {});
    CHECK(combine(combine(f, g, CombineOp::Min), combine(f, g, CombineOp::Max),
                  CombineOp::Add) == combine(f, g, CombineOp::Add));
  }
}

TEST_CASE("monotone composition") {
  const PwlFunction f = hat_line();
  CHECK(compose_monotone(MonotoneProfile::identity(-1, 2), f) == f);
  // (id v 0) o f = pos_part(f)
  const PwlFunction mixed(Space::line(), {{-1, 0}, {0, -1}, {1, 0}, {2, 1}, {3, 0}});
  const MonotoneProfile relu(ProfileDirection::NonDecreasing,
                             {{-2, 0}, {0, 0}, {2, 2}});
  CHECK(compose_monotone(relu, mixed) == pos_part(mixed));
  // min(id, 1/2) clips the peak; spot check on a grid
  const PwlFunction clipped = compose_monotone(MonotoneProfile::clip_at(-1, 2, rat(1, 2)), f);
  for (int i = -8; i <= 8; ++i) {
    const Rational x(i, 4);
    CHECK(clipped(x) == rational_min(f(x), rat(1, 2)));
  }
  CHECK_THROWS_WITH_AS(
      compose_monotone(MonotoneProfile::identity(0, rat(1, 2)), f),
      doctest::Contains("DomainTooSmall"), Error);
  const MonotoneProfile shifted(ProfileDirection::NonDecreasing, {{-2, 1}, {2, 2}});
  CHECK_THROWS_WITH_AS(compose_monotone(shifted, f),
                       doctest::Contains("NotAnchoredAtZero"), Error);
}

TEST_CASE("cone structure of compositions") {
  Rng rng(11);
  const Space line = Space::line();
  for (int i = 0; i < 200; ++i) {
    const PwlFunction f = random_pwl(rng, line, {});
    const auto [lo, hi] = range_bounds(f);
    const Rational dlo = rational_min(lo, rat(-1)), dhi = rational_max(hi, rat(1));
    const MonotoneProfile phi =
        random_monotone_profile(rng, dlo, dhi, ProfileDirection::NonDecreasing, true);
    const MonotoneProfile psi =
        random_monotone_profile(rng, dlo, dhi, ProfileDirection::NonDecreasing, true);
    const Rational a(rng.int_in(0, 6), 2), b(rng.int_in(0, 6), 2);
    const MonotoneProfile mix = combine_monotone_profiles(a, phi, b, psi);
    CHECK(compose_monotone(mix, f) ==
          combine(scale(compose_monotone(phi, f), a), scale(compose_monotone(psi, f), b),
                  CombineOp::Add));
  }
}

TEST_CASE("cone partition") {
  const PwlFunction f = hat_line();
  const auto two = cone_partition(f, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == compose_monotone(MonotoneProfile::clip_at(0, 1, rat(1, 2)), f));
  CHECK(combine(two[0], two[1], CombineOp::Add) == f);

  CHECK(cone_partition(f, 1).size() == 1);
  CHECK(cone_partition(f, 1)[0] == f);

  PwlFunction scaled = scale(baeq_fn(), rat(1, 2));  // range [0,1]
  const auto four = cone_partition(scaled, 4);
  PwlFunction sum = zero_function(Space::line());
  for (const auto& piece : four) {
    const auto [plo, phi_] = range_bounds(piece);
    CHECK(plo >= 0);
    CHECK(phi_ <= rat(1, 4));
    sum = combine(sum, piece, CombineOp::Add);
  }
  CHECK(sum == scaled);

  CHECK_THROWS_WITH_AS(cone_partition(scale(hat_line(), 2), 2),
                       doctest::Contains("RangeViolation"), Error);
}

TEST_CASE("range, support, restricted extrema") {
  const PwlFunction f = hat_line();
  CHECK(range_bounds(f) == std::pair<Rational, Rational>{0, 1});
  CHECK(support(f) == IntervalSet(Interval::closed(-1, 1)));
  CHECK(support(zero_function(Space::line())).empty());

  const auto [mn, mx] = restricted_extrema(f, IntervalSet(Interval::closed(0, 1)));
  CHECK(mn == 0);
  CHECK(mx == 1);
  const auto flat = restricted_extrema(baeq_fn(), IntervalSet(Interval::closed(1, 2)));
  CHECK(flat.first == 1);
  CHECK(flat.second == 1);

  const Space box = Space::compact(0, 4);
  const PwlFunction c(box, {{0, rat(7, 2)}, {4, rat(7, 2)}});
  const auto cc = restricted_extrema(c, IntervalSet(Interval::closed(1, 3)));
  CHECK(cc.first == rat(7, 2));
  CHECK(cc.second == rat(7, 2));

  CHECK_THROWS_WITH_AS(restricted_extrema(f, IntervalSet()),
                       doctest::Contains("EmptySet"), Error);
}

TEST_CASE("superlevel is antitone in the threshold") {
  Rng rng(13);
  const Space line = Space::line();
  for (int i = 0; i < kSweepCases; ++i) {
    const PwlFunction f = random_pwl(rng, line, {});
    const Rational t1(rng.int_in(-8, 8), 4);
    const Rational t2 = t1 + Rational(rng.int_in(0, 8), 4);
    CHECK(is_subset(superlevel(f, t2, true), superlevel(f, t1, true)));
  }
}

TEST_CASE("operations keep invariants on random compositions") {
  Rng rng(17);
  const Space line = Space::line();
  for (int i = 0; i < kSweepCases; ++i) {
    const PwlFunction f = random_pwl(rng, line, {});
    const PwlFunction g = random_pwl(rng, line, {});
    const PwlFunction h = combine(combine(f, g, CombineOp::Max), pos_part(f), CombineOp::Add);
    // type invariants: strictly increasing nodes, zero tails on the line
    const auto& nodes = h.nodes();
    CHECK(nodes.front().second == 0);
    CHECK(nodes.back().second == 0);
    for (std::size_t k = 1; k < nodes.size(); ++k)
      CHECK(nodes[k - 1].first < nodes[k].first);
    // pointwise agreement on a probe grid
    for (int p = 0; p < 5; ++p) {
      const Rational x(rng.int_in(-20, 20), 4);
      CHECK(h(x) == rational_max(f(x), g(x)) + rational_max(f(x), Rational(0)));
    }
  }
}
