#include "qdtm/suites.hpp"

#include "qdtm/distribution.hpp"
#include "qdtm/functional_lab.hpp"
#include "qdtm/quasi_integral.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/reconstruction.hpp"
#include "qdtm/serialization.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace qdtm {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = Clock::now();
  CriterionResult result;
  result.name = name;
  try {
    auto [ok, detail] = body();
    result.passed = ok;
    result.detail = detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

PwlFunction hat(const Space& space, const Rational& a, const Rational& m,
                const Rational& b, const Rational& peak) {
  return PwlFunction(space, {{a, 0}, {m, peak}, {b, 0}});
}

PwlFunction baless_hat() {
  return hat(Space::line(), -1, 0, 1, 1);
}

PwlFunction baeq_tent() {
  return PwlFunction(Space::line(), {{-1, 0}, {0, 2}, {1, 1}, {2, 1}, {3, 0}});
}

bool step_equals(const MonotonePwFunction& g, const Rational& t, const Rational& left,
                 const Rational& value, const Rational& right) {
  return g.nodes().size() == 1 && g.nodes()[0].t == t && g.nodes()[0].left == left &&
         g.nodes()[0].value == value && g.nodes()[0].right == right;
}

BoundaryMeasure point_mass(const Rational& loc, const Rational& mass) {
  BoundaryMeasure m;
  m.atoms.emplace_back(loc, mass);
  return m;
}

std::string count_detail(int cases) { return std::to_string(cases) + " cases"; }

}  // namespace

std::vector<Dtm> line_catalog() {
  const Space line = Space::line();
  std::vector<Dtm> out;
  out.push_back(Dtm::simple_contains(line, 0, 1));
  out.push_back(Dtm::simple_contains(line, 1, 2));
  out.push_back(Dtm::dirac(line, Rational(1, 2)));
  out.push_back(Dtm::lebesgue_on(line, 0, 1));
  out.push_back(Dtm::combo(line, {{2, Dtm::simple_contains(line, 0, 1)},
                                  {1, Dtm::dirac(line, 0)}}));
  out.push_back(Dtm::combo(line, {{Rational(1, 2), Dtm::lebesgue_on(line, -1, 1)},
                                  {3, Dtm::dirac(line, 2)},
                                  {1, Dtm::simple_contains(line, -2, -1)}}));
  out.push_back(Dtm::combo(line, {{1, Dtm::lebesgue_on(line, 0, 1)},
                                  {1, Dtm::lebesgue_on(line, 2, 3)}}));
  return out;
}

std::vector<Dtm> line_measure_catalog() {
  const Space line = Space::line();
  std::vector<Dtm> out;
  out.push_back(Dtm::dirac(line, Rational(1, 2)));
  out.push_back(Dtm::lebesgue_on(line, 0, 1));
  out.push_back(Dtm::combo(line, {{2, Dtm::dirac(line, -1)},
                                  {Rational(1, 3), Dtm::lebesgue_on(line, -1, 2)}}));
  out.push_back(Dtm::combo(line, {{1, Dtm::lebesgue_on(line, 0, 1)},
                                  {1, Dtm::lebesgue_on(line, 2, 3)}}));
  return out;
}

SuiteResult golden_suite() {
  SuiteResult suite{"golden", {}};

  suite.items.push_back(timed("golden_baless", []() -> std::pair<bool, std::string> {
    const Space line = Space::line();
    const Dtm mu = Dtm::simple_contains(line, 0, 1);
    const PwlFunction f = baless_hat();
    const DistributionBundle bundle = distribution_bundle(mu, f);
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        detail += std::string(detail.empty() ? "" : "; ") + what;
      }
    };
    expect(step_equals(bundle.L1, 1, 0, 0, 1), "L1 != 1_{t>1}");
    expect(step_equals(bundle.R1, 0, 1, 0, 0), "R1 != 1_{t<0}");
    expect(left_measure(bundle) == point_mass(1, 1), "l != delta_1");
    expect(right_measure(bundle) == point_mass(0, 1), "r != delta_0");
    expect(quasi_integral_R(mu, f) == 0, "R(f) != 0");
    expect(quasi_integral_L(mu, f) == 1, "L(f) != 1");
    const RlVerdict verdict = rl_equal_criterion(bundle);
    expect(!verdict.equal, "r = l should fail");
    expect(verdict.witness && *verdict.witness == Interval::open(0, 1),
           "witness != (0,1)");
    if (ok) detail = "L1, R1, l, r, R, L and the r=l verdict all match";
    return {ok, detail};
  }));

  suite.items.push_back(timed("golden_baeq", []() -> std::pair<bool, std::string> {
    const Space line = Space::line();
    const Dtm mu = Dtm::simple_contains(line, 1, 2);
    const PwlFunction f = baeq_tent();
    const DistributionBundle bundle = distribution_bundle(mu, f);
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        detail += std::string(detail.empty() ? "" : "; ") + what;
      }
    };
    expect(f(Rational(3, 2)) == 1, "f(3/2) != 1");
    expect(step_equals(bundle.L1, 1, 0, 0, 1), "L1 != 1_{t>1}");
    expect(step_equals(bundle.R1, 1, 1, 0, 0), "R1 != 1_{t<1}");
    expect(left_measure(bundle) == point_mass(1, 1), "l != delta_1");
    expect(right_measure(bundle) == point_mass(1, 1), "r != delta_1");
    expect(quasi_integral_R(mu, f) == 1, "R(f) != 1");
    expect(quasi_integral_L(mu, f) == 1, "L(f) != 1");
    expect(rl_equal_criterion(bundle).equal, "r = l should hold");
    if (ok) detail = "L1, R1, l = r = delta_1 and R = L = 1 all match";
    return {ok, detail};
  }));

  return suite;
}

namespace {

std::pair<bool, std::string> oracle_equivalence(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  Rng rng(seed);
  int ran = 0;
  Interval d = Interval::closed(0, 1);
  for (int i = 0; i < cases; ++i) {
    if (i % 25 == 0) {
      auto [a, b] = random_window(rng, line);
      d = Interval::closed(a, b);
    }
    const Dtm mu = Dtm::simple_contains(line, *d.lo, *d.hi);
    const PwlFunction f = random_pwl(rng, line, {});
    const auto [mn, mx] = oracle_min_max(d, f);
    if (quasi_integral_R(mu, f) != mn)
      return {false, "R != min over D for f=" + to_json(f).dump()};
    if (quasi_integral_L(mu, f) != mx)
      return {false, "L != max over D for f=" + to_json(f).dump()};
    ++ran;
  }
  return {true, count_detail(ran)};
}

std::pair<bool, std::string> linear_baseline(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  // Pinned value: the identity ramp against Lebesgue on [0,1].
  {
    const Space box = Space::compact(0, 1);
    const Dtm leb = Dtm::lebesgue_on(box, 0, 1);
    const PwlFunction id(box, {{0, 0}, {1, 1}});
    if (quasi_integral_R(leb, id) != Rational(1, 2))
      return {false, "R_{Leb[0,1]}(id) != 1/2"};
  }
  Rng rng(seed);
  int ran = 0;
  for (const Dtm& mu : line_measure_catalog()) {
    for (int i = 0; i < cases; ++i) {
      const PwlFunction f = random_pwl(rng, line, {});
      const PwlFunction g = random_pwl(rng, line, {});
      const Rational rf = quasi_integral_R(mu, f);
      const Rational rg = quasi_integral_R(mu, g);
      const Rational rfg = quasi_integral_R(mu, combine(f, g, CombineOp::Add));
      if (rfg != rf + rg)
        return {false, "additivity failed under " + mu.describe()};
      if (rf != linear_integral(mu, f))
        return {false, "engine disagrees with the direct integral under " + mu.describe()};
      ++ran;
    }
  }
  // r = l for measure-type expressions.
  for (int i = 0; i < cases / 5; ++i) {
    const Dtm mu = random_measure_type(rng, line);
    const PwlFunction f = random_pwl(rng, line, {});
    const DistributionBundle bundle = distribution_bundle(mu, f);
    if (!rl_equal_criterion(bundle).equal)
      return {false, "r != l for measure-type " + mu.describe()};
    if (!(right_measure(bundle) == left_measure(bundle)))
      return {false, "boundary measures differ for " + mu.describe()};
    ++ran;
  }
  return {true, count_detail(ran)};
}

std::pair<bool, std::string> conic_suite(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  Rng rng(seed);
  int ran = 0;
  const auto catalog = line_catalog();
  for (int i = 0; i < cases; ++i) {
    const Dtm& mu = catalog[rng.word() % catalog.size()];
    const CasePack pack = generate_case(CaseKind::ConePair, line, rng.word());
    const CheckReport report =
        conic_check_on_cone(mu, pack.functions[0], pack.profiles[0], pack.profiles[1],
                            pack.scalars[0], pack.scalars[1]);
    if (!report.passed())
      return {false, "cone linearity failed: " + report.failures[0].dump()};
    ++ran;
  }
  // Partition identity for n in {2, 4, 8}.
  PwlOptions opts;
  opts.nonnegative = true;
  opts.range01 = true;
  const int partition_cases = cases / 5;
  for (int i = 0; i < partition_cases; ++i) {
    const Dtm& mu = catalog[rng.word() % catalog.size()];
    const PwlFunction f = random_pwl(rng, line, opts);
    for (int n : {2, 4, 8}) {
      const CheckReport report = partition_identity_check(mu, f, n);
      if (!report.passed())
        return {false, "partition identity failed: " + report.failures[0].dump()};
      ++ran;
    }
  }
  return {true, count_detail(ran)};
}

std::pair<bool, std::string> duality_and_norm(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  Rng rng(seed);
  int ran = 0;
  const auto catalog = line_catalog();
  for (int i = 0; i < cases; ++i) {
    const Dtm& mu = catalog[rng.word() % catalog.size()];
    const PwlFunction f = random_pwl(rng, line, {});
    const CheckReport report = duality_check(mu, f);
    if (!report.passed()) return {false, "duality failed: " + report.failures[0].dump()};
    ++ran;
  }
  const RampSchedule schedule = RampSchedule::standard();
  for (const Dtm& mu : catalog) {
    const Rational norm = norm_estimate(FunctionalHandle::induced_R(mu), schedule);
    if (norm != mu.total_mass())
      return {false, "norm != total mass for " + mu.describe()};
    ++ran;
  }
  return {true, count_detail(ran)};
}

std::pair<bool, std::string> criterion_equivalence(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  Rng rng(seed);
  int ran = 0, false_cases = 0;
  for (int i = 0; i < cases; ++i) {
    const Dtm mu = random_catalog_measure(rng, line);
    const PwlFunction f = random_pwl(rng, line, {});
    const DistributionBundle bundle = distribution_bundle(mu, f);
    const RlVerdict verdict = rl_equal_criterion(bundle);
    const bool direct = right_measure(bundle) == left_measure(bundle);
    if (verdict.equal != direct)
      return {false, "criterion disagrees with direct equality for " + mu.describe()};
    if (!verdict.equal) {
      ++false_cases;
      if (!verdict.witness) return {false, "false verdict without a witness"};
    }
    ++ran;
  }
  if (false_cases < 20)
    return {false, "too few unequal cases sampled: " + std::to_string(false_cases)};
  return {true, count_detail(ran) + ", " + std::to_string(false_cases) + " with r != l"};
}

std::pair<bool, std::string> hierarchy_witnesses(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  const Dtm simple = Dtm::simple_contains(line, 0, 1);
  const FunctionalHandle rho = FunctionalHandle::induced_R(simple);
  const ClassificationReport report = classify(rho, cases, seed);

  auto verdict_is = [&](const char* cls, Verdict v) {
    return report.at(cls).verdict == v;
  };
  if (!verdict_is("p_conic", Verdict::Pass)) return {false, "p_conic should pass"};
  if (!verdict_is("r", Verdict::Pass)) return {false, "r should pass"};
  if (!verdict_is("d", Verdict::Pass)) return {false, "d should pass"};
  if (!verdict_is("linear", Verdict::Fail) || !report.at("linear").witness)
    return {false, "linear should fail with a witness"};
  if (!verdict_is("s", Verdict::Fail)) return {false, "s should fail (R(-f) != -R(f))"};
  if (!report.hierarchy_consistent) return {false, "hierarchy inconsistent"};
  if (!report.norm || *report.norm != 1) return {false, "norm estimate != mu(X)"};

  // The strict inclusion QI != Phi+ at sample level: some induced functional
  // must fail additivity on a singly generated subalgebra.
  const CheckReport ql = quasi_linearity_check(rho, baless_hat(), cases, seed ^ 0x9e37);
  if (ql.passed()) return {false, "no quasi-linearity witness found"};

  // Classification of the linear baseline stays linear, and the dual handle
  // lands in the lower cone classes.
  const ClassificationReport linear_report =
      classify(FunctionalHandle::linear(Dtm::lebesgue_on(line, 0, 1)),
               cases / 2, seed ^ 0x51f1);
  for (const auto& [cls, verdict] : linear_report.verdicts) {
    if (verdict.verdict != Verdict::Pass)
      return {false, "linear integral failed class " + cls};
  }
  const ClassificationReport dual_report = classify(
      FunctionalHandle::induced_L(simple), cases / 2, seed ^ 0x2c55);
  if (dual_report.at("n_conic").verdict != Verdict::Pass)
    return {false, "L should be n-conic"};
  if (dual_report.at("l").verdict != Verdict::Pass) return {false, "L should be an l-functional"};
  if (dual_report.at("p_conic").verdict != Verdict::Fail)
    return {false, "L should fail p_conic"};
  if (!dual_report.hierarchy_consistent) return {false, "dual hierarchy inconsistent"};
  return {true, "witnesses found; hierarchy consistent"};
}

std::pair<bool, std::string> pushforward_suite(std::uint64_t seed, int cases) {
  const Space line = Space::line();
  Rng rng(seed);
  int ran = 0;
  const int rounds = cases / 25;
  for (int i = 0; i < rounds; ++i) {
    const Dtm mu = (i % 2 == 0) ? random_catalog_measure(rng, line)
                                : random_measure_type(rng, line);
    const PwlFunction f = random_pwl(rng, line, {});
    const DistributionBundle bundle = distribution_bundle(mu, f);
    const CheckReport report = pushforward_check(mu, f, bundle, 25, rng.word());
    if (!report.passed())
      return {false, "pushforward failed: " + report.failures[0].dump()};
    ran += report.cases;
  }
  return {true, count_detail(ran)};
}

MonotonePwFunction random_nondecreasing(Rng& rng) {
  std::vector<Rational> ts;
  const int k = static_cast<int>(rng.int_in(1, 4));
  for (int i = 0; i < k; ++i) ts.push_back(Rational(rng.int_in(-12, 12), 4));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<MonotonePwFunction::Node> nodes;
  Rational level(rng.int_in(-4, 4));
  for (const Rational& t : ts) {
    MonotonePwFunction::Node n;
    n.t = t;
    n.left = level;
    n.value = n.left + Rational(rng.int_in(0, 4), 4);
    n.right = n.value + Rational(rng.int_in(0, 4), 4);
    level = n.right + Rational(rng.int_in(0, 4), 4);  // slope via next left
    nodes.push_back(n);
  }
  return MonotonePwFunction(MonotonePwFunction::Direction::NonDecreasing,
                            std::move(nodes));
}

std::pair<bool, std::string> stieltjes_identity(std::uint64_t seed, int cases) {
  Rng rng(seed);
  int ran = 0;
  for (int i = 0; i < cases; ++i) {
    const MonotonePwFunction f = random_nondecreasing(rng);
    const MonotonePwFunction g = random_nondecreasing(rng);
    const Rational a(rng.int_in(-6, -1));
    const Rational b(rng.int_in(0, 6));
    const CheckReport report = integration_by_parts_check(f, g, a, b);
    if (!report.passed())
      return {false, "integration by parts failed: " + report.failures[0].dump()};
    ++ran;
  }
  return {true, count_detail(ran)};
}

}  // namespace

SuiteResult properties_suite(std::uint64_t seed, int cases) {
  SuiteResult suite{"properties", {}};
  suite.items.push_back(timed("oracle_equivalence", [&] {
    return oracle_equivalence(seed ^ 0x01, cases);
  }));
  suite.items.push_back(timed("linear_baseline", [&] {
    return linear_baseline(seed ^ 0x02, cases);
  }));
  suite.items.push_back(timed("p_conic_suite", [&] {
    return conic_suite(seed ^ 0x03, cases);
  }));
  suite.items.push_back(timed("duality_and_norm", [&] {
    return duality_and_norm(seed ^ 0x04, cases);
  }));
  suite.items.push_back(timed("criterion_equivalence", [&] {
    return criterion_equivalence(seed ^ 0x05, cases >= 500 ? cases / 2 : cases);
  }));
  suite.items.push_back(timed("hierarchy_witnesses", [&] {
    return hierarchy_witnesses(seed ^ 0x06, std::min(cases, 600));
  }));
  suite.items.push_back(timed("pushforward_bounds", [&] {
    return pushforward_suite(seed ^ 0x07, cases);
  }));
  suite.items.push_back(timed("stieltjes_identity", [&] {
    return stieltjes_identity(seed ^ 0x08, cases >= 500 ? 200 : cases);
  }));
  return suite;
}

SuiteResult roundtrip_suite(std::uint64_t seed, int cases) {
  SuiteResult suite{"roundtrip", {}};
  suite.items.push_back(timed("representation_round_trip", [&]() -> std::pair<bool, std::string> {
    const Space line = Space::line();
    Rng rng(seed);
    const RampSchedule schedule = RampSchedule::standard();
    int ran = 0;
    for (const Dtm& mu : line_catalog()) {
      std::vector<IntervalSet> sets;
      for (int i = 0; i < cases; ++i) {
        sets.push_back(i % 2 == 0 ? random_open_set(rng, line)
                                  : random_compact_set(rng, line));
      }
      const CheckReport report = round_trip_check(mu, sets, schedule);
      if (!report.passed())
        return {false,
                mu.describe() + " failed: " + report.failures[0].dump()};
      ran += report.cases;
    }
    return {true, count_detail(ran)};
  }));
  return suite;
}

}  // namespace qdtm
