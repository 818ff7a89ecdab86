#include "qdtm/distribution.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/suites.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {

const Space kLine = Space::line();

PwlFunction hat_line() {
  return PwlFunction(kLine, {{-1, 0}, {0, 1}, {1, 0}});
}

PwlFunction baeq_fn() {
  return PwlFunction(kLine, {{-1, 0}, {0, 2}, {1, 1}, {2, 1}, {3, 0}});
}

bool single_step(const MonotonePwFunction& g, const Rational& t, const Rational& left,
                 const Rational& value, const Rational& right) {
  return g.nodes().size() == 1 && g.nodes()[0].t == t && g.nodes()[0].left == left &&
         g.nodes()[0].value == value && g.nodes()[0].right == right;
}

}  // namespace

TEST_CASE("step distributions of the simple measure") {
  const Dtm mu = Dtm::simple_contains(kLine, 0, 1);
  const DistributionBundle b = distribution_bundle(mu, hat_line());
  CHECK(single_step(b.L1, 1, 0, 0, 1));   // 1 for t > 1
  CHECK(single_step(b.R1, 0, 1, 0, 0));   // 1 for t < 0
  CHECK(b.mass == 1);
  CHECK(b.hull_lo == 0);
  CHECK(b.hull_hi == 1);

  const Dtm mu2 = Dtm::simple_contains(kLine, 1, 2);
  const DistributionBundle b2 = distribution_bundle(mu2, baeq_fn());
  CHECK(single_step(b2.L1, 1, 0, 0, 1));
  CHECK(single_step(b2.R1, 1, 1, 0, 0));
}

TEST_CASE("affine distribution of lebesgue against the identity") {
  const Space box = Space::compact(0, 1);
  const Dtm leb = Dtm::lebesgue_on(box, 0, 1);
  const PwlFunction id(box, {{0, 0}, {1, 1}});
  const DistributionBundle b = distribution_bundle(leb, id);
  // R1(t) = 1 - t on [0, 1]
  CHECK(b.R1.value(rat(1, 4)) == rat(3, 4));
  CHECK(b.R1.value(0) == 1);
  CHECK(b.R1.value(1) == 0);
  CHECK(b.L1.value(rat(1, 4)) == rat(1, 4));

  const BoundaryMeasure r = right_measure(b);
  CHECK(r.atoms.empty());
  REQUIRE(r.density.size() == 1);
  CHECK(r.density[0] == std::tuple<Rational, Rational, Rational>{0, 1, 1});
  CHECK(right_measure(b) == left_measure(b));
}

TEST_CASE("boundary measures as jump data") {
  const Dtm mu = Dtm::simple_contains(kLine, 0, 1);
  const DistributionBundle b = distribution_bundle(mu, hat_line());
  const BoundaryMeasure l = left_measure(b), r = right_measure(b);
  REQUIRE(l.atoms.size() == 1);
  REQUIRE(r.atoms.size() == 1);
  CHECK(l.atoms[0] == std::pair<Rational, Rational>{1, 1});   // delta_1
  CHECK(r.atoms[0] == std::pair<Rational, Rational>{0, 1});   // delta_0
  CHECK(l.density.empty());
  CHECK(r.density.empty());
}

TEST_CASE("measure_of and stieltjes integrals") {
  BoundaryMeasure delta0;
  delta0.atoms.emplace_back(0, 1);
  CHECK(measure_of(delta0, IntervalSet(Interval::open(-1, 1))) == 1);
  CHECK(measure_of(delta0, IntervalSet(Interval::open(0, 1))) == 0);

  BoundaryMeasure delta1;
  delta1.atoms.emplace_back(1, 1);
  CHECK(stieltjes_integral(Profile({{-2, -2}, {2, 2}}), delta1) == 1);
  CHECK(stieltjes_integral_id(delta1) == 1);

  BoundaryMeasure uniform;
  uniform.density.emplace_back(0, 1, 1);
  CHECK(stieltjes_integral_id(uniform) == rat(1, 2));
  CHECK(stieltjes_integral(Profile({{0, 0}, {1, 1}}), uniform) == rat(1, 2));
  CHECK_THROWS_WITH_AS(stieltjes_integral(Profile({{0, 0}, {rat(1, 2), 1}}), uniform),
                       doctest::Contains("DomainTooSmall"), Error);
}

TEST_CASE("rl criterion with witnesses") {
  const Dtm mu = Dtm::simple_contains(kLine, 0, 1);
  const RlVerdict unequal = rl_equal_criterion(distribution_bundle(mu, hat_line()));
  CHECK_FALSE(unequal.equal);
  REQUIRE(unequal.witness.has_value());
  CHECK(*unequal.witness == Interval::open(0, 1));

  const Dtm mu2 = Dtm::simple_contains(kLine, 1, 2);
  CHECK(rl_equal_criterion(distribution_bundle(mu2, baeq_fn())).equal);
}

TEST_CASE("criterion agrees with direct boundary-measure equality") {
  Rng rng(29);
  int unequal_seen = 0;
  for (int i = 0; i < 200; ++i) {
    const Dtm mu = random_catalog_measure(rng, kLine);
    const PwlFunction f = random_pwl(rng, kLine, {});
    const DistributionBundle b = distribution_bundle(mu, f);
    const bool direct = right_measure(b) == left_measure(b);
    const RlVerdict verdict = rl_equal_criterion(b);
    CHECK(verdict.equal == direct);
    if (!verdict.equal) ++unequal_seen;
  }
  CHECK(unequal_seen > 20);
}

TEST_CASE("defining identity r((t,inf)) = mu(superlevel)") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const Dtm mu = random_catalog_measure(rng, kLine);
    const PwlFunction f = random_pwl(rng, kLine, {});
    const DistributionBundle b = distribution_bundle(mu, f);
    const BoundaryMeasure r = right_measure(b), l = left_measure(b);
    for (const auto& node : f.nodes()) {
      for (const Rational& t :
           {node.second, node.second + rat(1, 3), node.second - rat(1, 5)}) {
        CHECK(measure_of(r, IntervalSet(Interval::above(t, true))) ==
              mu(superlevel(f, t, true)));
        CHECK(measure_of(l, IntervalSet(Interval::below(t, true))) ==
              mu(sublevel(f, t, true)));
        CHECK(b.R1.value(t) == mu(superlevel(f, t, true)));
        CHECK(b.R2.value(t) == mu(superlevel(f, t, false)));
        CHECK(b.L1.value(t) == mu(sublevel(f, t, true)));
        CHECK(b.L2.value(t) == mu(sublevel(f, t, false)));
      }
    }
    // totals and hulls
    CHECK(r.total() == b.mass);
    CHECK(l.total() == b.mass);
    const auto hull_r = r.support_hull();
    if (hull_r) {
      CHECK(hull_r->first >= b.hull_lo);
      CHECK(hull_r->second <= b.hull_hi);
    }
  }
}

TEST_CASE("point masses for simple measures and constants") {
  Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    auto [lo, hi] = random_window(rng, kLine);
    const Dtm mu = Dtm::simple_contains(kLine, lo, hi);
    const PwlFunction f = random_pwl(rng, kLine, {});
    const DistributionBundle b = distribution_bundle(mu, f);
    const auto [mn, mx] = restricted_extrema(f, IntervalSet(Interval::closed(lo, hi)));
    BoundaryMeasure expected_r, expected_l;
    expected_r.atoms.emplace_back(mn, 1);
    expected_l.atoms.emplace_back(mx, 1);
    CHECK(right_measure(b) == expected_r);
    CHECK(left_measure(b) == expected_l);
    CHECK(mn <= mx);
  }
  // constant function on a compact space: m = mass * delta_c
  const Space box = Space::compact(0, 2);
  const Dtm leb = Dtm::lebesgue_on(box, 0, 2);
  const PwlFunction c(box, {{0, rat(5, 4)}, {2, rat(5, 4)}});
  const DistributionBundle b = distribution_bundle(leb, c);
  BoundaryMeasure expected;
  expected.atoms.emplace_back(rat(5, 4), 2);
  CHECK(right_measure(b) == expected);
  CHECK(left_measure(b) == expected);
}

TEST_CASE("weak distributions around co-bounded preimages") {
  // dip below zero: weak superlevels are co-bounded for t <= 0
  const PwlFunction dip(kLine, {{-1, 0}, {0, -1}, {1, 0}});
  const Dtm leb = Dtm::lebesgue_on(kLine, 0, 2);
  const DistributionBundle b = distribution_bundle(leb, dip);
  CHECK(b.R2.value(rat(-1, 2)) == rat(3, 2));  // [1/2, 2] survives
  CHECK(b.R2.left_limit(0) == 1);
  CHECK(b.R2.value(0) == 1);       // f >= 0 exactly on the tails
  CHECK(b.R2.right_limit(0) == 0);
  // every catalog member has continuous-from-the-relevant-side weak
  // distributions, so the computed jump sets stay empty
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const Dtm mu = random_catalog_measure(rng, kLine);
    const PwlFunction f = random_pwl(rng, kLine, {});
    const DistributionBundle bundle = distribution_bundle(mu, f);
    CHECK(bundle.E.empty());
    CHECK(bundle.E1.empty());
  }
}

TEST_CASE("pushforward inequalities and equalities") {
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  const PwlFunction f = hat_line();
  const DistributionBundle b = distribution_bundle(simple, f);
  // the spec's spot case A = (0,1): f^{-1}(A) splits off the peak point
  const IntervalSet a(Interval::open(0, 1));
  CHECK(preimage(f, a) ==
        IntervalSet({Interval::open(-1, 0), Interval::open(0, 1)}));
  CHECK(simple(preimage(f, a)) == 0);
  CHECK(pushforward_check(simple, f, b, 200, 43).passed());

  const Dtm leb = Dtm::lebesgue_on(kLine, -1, 1);
  const DistributionBundle bl = distribution_bundle(leb, f);
  CHECK(pushforward_check(leb, f, bl, 200, 44).passed());

  const Dtm dirac = Dtm::dirac(kLine, rat(1, 2));
  const DistributionBundle bd = distribution_bundle(dirac, f);
  CHECK(pushforward_check(dirac, f, bd, 200, 45).passed());
}

TEST_CASE("integration by parts on pinned cases") {
  using Node = MonotonePwFunction::Node;
  using Dir = MonotonePwFunction::Direction;
  // two unit steps at 0 over [-1, 1]: both sides equal 1
  const MonotonePwFunction step(Dir::NonDecreasing, {Node{0, 0, 1, 1}});
  CHECK(integration_by_parts_check(step, step, -1, 1).passed());

  // F = G = t on [0,1]: int t dt + int t dt = 1
  const MonotonePwFunction ramp(Dir::NonDecreasing,
                                {Node{0, 0, 0, 0}, Node{1, 1, 1, 1}});
  CHECK(integration_by_parts_check(ramp, ramp, 0, 1).passed());

  // G constant: left side collapses to G * (F(b+) - F(a-))
  const MonotonePwFunction c = MonotonePwFunction::constant(rat(7, 3));
  CHECK(integration_by_parts_check(step, c, -2, 2).passed());
  CHECK(integration_by_parts_check(ramp, c, 0, 1).passed());
}
