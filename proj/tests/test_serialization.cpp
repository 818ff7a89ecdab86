#include "qdtm/serialization.hpp"

#include "qdtm/error.hpp"
#include "qdtm/randgen.hpp"

#include <doctest.h>

using namespace qdtm;

namespace {
const Space kLine = Space::line();
}

TEST_CASE("interval and set wire format") {
  const Interval iv = Interval::make(rat(-1, 2), std::nullopt, false, true);
  CHECK(to_json(iv) == json::array({"-1/2", "inf", false, true}));
  CHECK(interval_from_json(to_json(iv)) == iv);
  // unicode minus sentinel accepted
  CHECK(interval_from_json(json::array({"−inf", "0", true, false})) ==
        Interval::below(0, false));

  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const IntervalSet a = random_admissible_set(rng, kLine);
    CHECK(interval_set_from_json(to_json(a)) == a);
  }
}

TEST_CASE("function wire format") {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const PwlFunction f = random_pwl(rng, kLine, {});
    CHECK(pwl_from_json(to_json(f)) == f);
  }
  const Space box = Space::compact(0, 2);
  PwlOptions opts;
  for (int i = 0; i < 100; ++i) {
    const PwlFunction f = random_pwl(rng, box, opts);
    CHECK(pwl_from_json(to_json(f)) == f);
  }
}

TEST_CASE("measure wire format matches the documented schema") {
  const Dtm simple = Dtm::simple_contains(kLine, 0, 1);
  CHECK(to_json(simple) == json{{"kind", "simple"}, {"D", json::array({"0", "1"})}});
  const Dtm dirac = Dtm::dirac(kLine, rat(1, 2));
  CHECK(to_json(dirac) == json{{"kind", "dirac"}, {"x", "1/2"}});
  const Dtm leb = Dtm::lebesgue_on(kLine, 0, 1);
  CHECK(to_json(leb) == json{{"kind", "lebesgue"}, {"I", json::array({"0", "1"})}});

  const Dtm combo = Dtm::combo(kLine, {{2, simple}, {rat(1, 2), dirac}});
  const json j = to_json(combo);
  CHECK(j["kind"] == "combo");
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0][0] == "2");

  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Dtm mu = random_catalog_measure(rng, kLine);
    const Dtm back = dtm_from_json(to_json(mu), kLine);
    // spot equality through evaluations
    for (int k = 0; k < 4; ++k) {
      const IntervalSet a = random_admissible_set(rng, kLine);
      CHECK(mu(a) == back(a));
    }
  }
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_WITH_AS(dtm_from_json(json{{"kind", "simple"}, {"D", json::array({"0", "1/0"})}}, kLine),
                       doctest::Contains("InvalidRational"), Error);
  CHECK_THROWS_WITH_AS(dtm_from_json(json{{"kind", "wut"}}, kLine),
                       doctest::Contains("InvalidMeasure"), Error);
  CHECK_THROWS_AS(space_from_json(json{{"kind", "circle"}}), Error);
  CHECK_THROWS_AS(interval_from_json(json::array({"0", "1", 3, false})), Error);
}

TEST_CASE("bundle csv is exact and stable") {
  const Dtm mu = Dtm::simple_contains(kLine, 0, 1);
  const PwlFunction hat(kLine, {{-1, 0}, {0, 1}, {1, 0}});
  const DistributionBundle b = distribution_bundle(mu, hat);
  const std::string csv = bundle_csv(b);
  CHECK(csv.substr(0, 16) == "t,L1,L2,R1,R2\n0,");
  CHECK(csv == bundle_csv(distribution_bundle(mu, hat)));  // byte stable
  // rows: breakpoints 0 and 1 plus the midpoint
  CHECK(csv == "t,L1,L2,R1,R2\n"
               "0,0,0,0,1\n"
               "1/2,0,0,0,0\n"
               "1,0,1,0,0\n");
}

TEST_CASE("boundary measure wire format") {
  BoundaryMeasure m;
  m.atoms.emplace_back(rat(1, 2), 2);
  m.density.emplace_back(0, 1, rat(1, 3));
  const json j = to_json(m);
  CHECK(j == json{{"atoms", json::array({json::array({"1/2", "2"})})},
                  {"density", json::array({json::array({"0", "1", "1/3"})})}});
}
