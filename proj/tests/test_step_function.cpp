#include "qdtm/step_function.hpp"

#include "qdtm/error.hpp"

#include <doctest.h>

using namespace qdtm;

using Node = MonotonePwFunction::Node;
using Dir = MonotonePwFunction::Direction;

TEST_CASE("steps, limits, extension") {
  // unit step at 0, right-continuous
  const MonotonePwFunction step(Dir::NonDecreasing, {Node{0, 0, 1, 1}});
  CHECK(step.value(-5) == 0);
  CHECK(step.value(0) == 1);
  CHECK(step.value(3) == 1);
  CHECK(step.left_limit(0) == 0);
  CHECK(step.right_limit(0) == 1);
  CHECK(step.right_continuous());
  CHECK_FALSE(step.left_continuous());
}

TEST_CASE("affine pieces and integration") {
  // ramp from 0 to 1 over [0,1]
  const MonotonePwFunction ramp(Dir::NonDecreasing,
                                {Node{0, 0, 0, 0}, Node{1, 1, 1, 1}});
  CHECK(ramp.value(rat(1, 2)) == rat(1, 2));
  CHECK(ramp.riemann_integral(0, 1) == rat(1, 2));
  CHECK(ramp.riemann_integral(-2, 0) == 0);
  CHECK(ramp.riemann_integral(1, 3) == 2);
  CHECK(ramp.riemann_integral(rat(1, 2), rat(3, 2)) == rat(7, 8));
}

TEST_CASE("canonical form removes silent nodes") {
  const MonotonePwFunction a(Dir::NonDecreasing,
                             {Node{0, 0, 0, 0}, Node{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)},
                              Node{1, 1, 1, 1}});
  const MonotonePwFunction b(Dir::NonDecreasing, {Node{0, 0, 0, 0}, Node{1, 1, 1, 1}});
  CHECK(a == b);
  CHECK(MonotonePwFunction::constant(rat(3)) ==
        MonotonePwFunction(Dir::NonDecreasing, {Node{7, 3, 3, 3}}));
}

TEST_CASE("addition and scaling") {
  const MonotonePwFunction step(Dir::NonDecreasing, {Node{0, 0, 1, 1}});
  const MonotonePwFunction ramp(Dir::NonDecreasing,
                                {Node{-1, 0, 0, 0}, Node{1, 2, 2, 2}});
  const MonotonePwFunction sum = add(step, ramp);
  CHECK(sum.value(-2) == 0);
  CHECK(sum.left_limit(0) == 1);
  CHECK(sum.value(0) == 2);
  CHECK(sum.value(1) == 3);
  const MonotonePwFunction neg = scale(step, -2);
  CHECK(neg.direction() == Dir::NonIncreasing);
  CHECK(neg.value(1) == -2);
}

TEST_CASE("monotonicity is validated") {
  CHECK_THROWS_WITH_AS(
      MonotonePwFunction(Dir::NonDecreasing, {Node{0, 1, 0, 1}}),
      doctest::Contains("InvalidStepFunction"), Error);
  CHECK_THROWS_AS(
      MonotonePwFunction(Dir::NonDecreasing, {Node{0, 0, 0, 2}, Node{1, 1, 1, 1}}),
      Error);
}
