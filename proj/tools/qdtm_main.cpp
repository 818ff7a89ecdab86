// Batch front end: parse a scenario file, run the requested computations and
// suites, and emit report.json / distributions.csv. Exit codes: 0 all good,
// 1 input error (machine-readable error object on stdout), 2 a mathematical
// check failed (witnesses in the report).

#include "qdtm/distribution.hpp"
#include "qdtm/functional_lab.hpp"
#include "qdtm/quasi_integral.hpp"
#include "qdtm/randgen.hpp"
#include "qdtm/reconstruction.hpp"
#include "qdtm/serialization.hpp"
#include "qdtm/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace qdtm {
namespace {

namespace fs = std::filesystem;

struct Scenario {
  Space space = Space::line();
  Dtm measure = Dtm::dirac(Space::line(), 0);
  PwlFunction function = zero_function(Space::line());
  std::set<std::string> tasks;
  std::uint64_t seed = 1;
  int budget = 200;
};

Scenario parse_scenario(const fs::path& path) {
  std::ifstream in(path);
  require(in.good(), "InvalidScenario", "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("InvalidScenario", std::string("JSON parse error: ") + e.what());
  }
  require(j.is_object(), "InvalidScenario", "scenario must be a JSON object");
  Scenario s;
  s.space = space_from_json(j.at("space"));
  s.measure = dtm_from_json(j.at("measure"), s.space);
  s.function = pwl_from_json(j.at("function"));
  require_same_space(s.space, s.function.space());
  require(j.contains("tasks") && j.at("tasks").is_array() && !j.at("tasks").empty(),
          "InvalidScenario", "tasks must be a nonempty array");
  static const std::set<std::string> known{"integrate", "distributions", "measures",
                                           "reconstruct", "classify", "check"};
  for (const json& t : j.at("tasks")) {
    const std::string name = t.get<std::string>();
    require(known.count(name) > 0, "InvalidScenario", "unknown task '" + name + "'");
    s.tasks.insert(name);
  }
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("budget")) s.budget = j.at("budget").get<int>();
  require(s.budget > 0, "InvalidScenario", "budget must be positive");
  return s;
}

json validation_to_json(const ValidationReport& r) {
  json out{{"cases", r.cases}, {"status", r.passed() ? "pass" : "fail"}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json check_to_json(const CheckReport& r) {
  json out{{"name", r.name}, {"cases", r.cases},
           {"status", r.passed() ? "pass" : "fail"}};
  if (!r.failures.empty()) out["witness"] = r.failures.front();
  return out;
}

json classification_to_json(const ClassificationReport& r) {
  json verdicts = json::object();
  for (const auto& [cls, v] : r.verdicts) {
    json item{{"status", v.verdict == Verdict::Pass ? "pass" : "fail"},
              {"cases", v.cases}};
    if (v.witness) item["witness"] = *v.witness;
    if (!v.skipped_clauses.empty()) item["not_applicable"] = v.skipped_clauses;
    verdicts[cls] = item;
  }
  json out{{"verdicts", verdicts}, {"hierarchy_consistent", r.hierarchy_consistent}};
  out["norm"] = r.norm ? json(rational_str(*r.norm)) : json("unknown");
  return out;
}

json reconstruction_to_json(const ReconstructionResult& r) {
  json samples = json::array();
  for (const auto& [w, v] : r.samples)
    samples.push_back(json::array({rational_str(w), rational_str(v)}));
  json out{{"value", rational_str(r.value)}, {"samples", samples}};
  if (r.kind == ReconstructionResult::Kind::Stabilized) {
    out["certificate"] = {{"kind", "stabilized"},
                          {"at_width", rational_str(r.stabilized_at)}};
  } else {
    out["certificate"] = {{"kind", "extrapolated"},
                          {"slope", rational_str(r.slope)},
                          {"intercept", rational_str(r.intercept)},
                          {"residual", rational_str(r.residual)}};
  }
  return out;
}

int run_scenario(const std::string& scenario_path, const std::string& out_dir,
                 std::uint64_t seed_override, bool seed_given, int cases_override,
                 const std::string& format) {
  Scenario s = parse_scenario(scenario_path);
  if (seed_given) s.seed = seed_override;
  if (cases_override > 0) s.budget = cases_override;

  fs::create_directories(out_dir);
  json report;
  report["scenario"] = {{"space", to_json(s.space)},
                        {"measure", to_json(s.measure)},
                        {"function", to_json(s.function)},
                        {"seed", s.seed},
                        {"budget", s.budget}};
  bool math_failure = false;

  const DistributionBundle bundle = distribution_bundle(s.measure, s.function);

  if (s.tasks.count("integrate")) {
    report["R"] = rational_str(quasi_integral_R(s.measure, s.function));
    report["L"] = rational_str(quasi_integral_L(s.measure, s.function));
  }

  if (s.tasks.count("distributions")) {
    const RlVerdict verdict = rl_equal_criterion(bundle);
    json dist{{"mass", rational_str(bundle.mass)},
              {"hull", json::array({rational_str(bundle.hull_lo),
                                    rational_str(bundle.hull_hi)})},
              {"rl_equal", verdict.equal},
              {"right_measure", to_json(right_measure(bundle))},
              {"left_measure", to_json(left_measure(bundle))}};
    if (verdict.witness) dist["rl_witness"] = to_json(*verdict.witness);
    json jumps_e = json::array(), jumps_e1 = json::array();
    for (const Rational& t : bundle.E) jumps_e.push_back(rational_str(t));
    for (const Rational& t : bundle.E1) jumps_e1.push_back(rational_str(t));
    dist["E"] = jumps_e;
    dist["E1"] = jumps_e1;
    if (format != "json") {
      const fs::path csv_path = fs::path(out_dir) / "distributions.csv";
      std::ofstream csv(csv_path);
      csv << bundle_csv(bundle);
      dist["csv"] = "distributions.csv";
    }
    report["distributions"] = dist;
    report["bundle_csv"] = "distributions.csv";
  }

  if (s.tasks.count("measures")) {
    const ValidationReport axioms = validate_dtm(s.measure, s.budget, s.seed);
    const ValidationReport tm = is_topological_measure(s.measure, s.budget, s.seed ^ 0x7071);
    report["measures"] = {{"dtm_axioms", validation_to_json(axioms)},
                          {"topological_measure", validation_to_json(tm)}};
    if (!axioms.passed()) math_failure = true;
  }

  if (s.tasks.count("reconstruct")) {
    Rng rng(s.seed ^ 0x5eed);
    const RampSchedule schedule = RampSchedule::standard();
    const FunctionalHandle rho = FunctionalHandle::induced_R(s.measure);
    const int sets = std::max(4, s.budget / 10);
    json table = json::array();
    int failures = 0;
    for (int i = 0; i < sets; ++i) {
      const IntervalSet a = i % 2 == 0 ? random_open_set(rng, s.space)
                                       : random_compact_set(rng, s.space);
      const ReconstructionResult rec = reconstruct_set(rho, a, schedule);
      const Rational expected = s.measure(a);
      const bool ok = rec.value == expected;
      if (!ok) ++failures;
      json row = reconstruction_to_json(rec);
      row["set"] = to_json(a);
      row["expected"] = rational_str(expected);
      row["status"] = ok ? "pass" : "fail";
      table.push_back(row);
    }
    report["reconstruction"] = {{"cases", sets}, {"failures", failures},
                                {"table", table}};
    if (failures > 0) math_failure = true;
  }

  if (s.tasks.count("classify")) {
    const ClassificationReport cls =
        classify(FunctionalHandle::induced_R(s.measure), s.budget, s.seed ^ 0xc1a5);
    report["classification"] = classification_to_json(cls);
    if (!cls.hierarchy_consistent) math_failure = true;
  }

  if (s.tasks.count("check")) {
    Rng rng(s.seed ^ 0xc4ec);
    json checks = json::array();
    auto push = [&](const CheckReport& r) {
      checks.push_back(check_to_json(r));
      if (!r.passed()) math_failure = true;
    };
    push(duality_check(s.measure, s.function));
    {
      const auto [lo, hi] = range_bounds(s.function);
      const Rational dlo = rational_min(lo, Rational(-1));
      const Rational dhi = rational_max(hi, Rational(1));
      const bool anchored = s.space.is_line();
      push(conic_check_on_cone(
          s.measure, s.function,
          random_monotone_profile(rng, dlo, dhi, ProfileDirection::NonDecreasing, anchored),
          random_monotone_profile(rng, dlo, dhi, ProfileDirection::NonDecreasing, anchored),
          Rational(rng.int_in(0, 4)), Rational(rng.int_in(0, 4))));
    }
    {
      PwlFunction f01 = pos_part(s.function);
      const Rational top = range_bounds(f01).second;
      if (top > 1) f01 = scale(f01, Rational(1) / top);
      push(partition_identity_check(s.measure, f01, 4));
    }
    push(lipschitz_check(s.measure, pos_part(s.function),
                         scale(pos_part(s.function), Rational(1, 2))));
    push(pushforward_check(s.measure, s.function, bundle, s.budget / 4, s.seed ^ 0xbeef));
    report["checks"] = checks;
  }

  if (format != "csv") {
    std::ofstream out(fs::path(out_dir) / "report.json");
    out << report.dump(2) << "\n";
  }
  return math_failure ? 2 : 0;
}

int run_suite(const std::string& name, std::uint64_t seed, int cases) {
  SuiteResult result;
  if (name == "golden") {
    result = golden_suite();
  } else if (name == "properties") {
    result = properties_suite(seed, cases > 0 ? cases : 500);
  } else if (name == "roundtrip") {
    result = roundtrip_suite(seed, cases > 0 ? cases : 50);
  } else {
    fail("InvalidScenario", "unknown suite '" + name + "'");
  }
  for (const CriterionResult& item : result.items) {
    std::cout << (item.passed ? "[PASS] " : "[FAIL] ") << result.suite << "/"
              << item.name << "  (" << item.detail << ", "
              << item.seconds << "s)\n";
  }
  return result.passed() ? 0 : 2;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact quasi-integration against deficient topological measures"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = ".", format = "both";
  std::uint64_t seed = 1;
  int cases = 0;
  bool seed_given = false;

  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--seed", seed, "Seed override");
  run->add_option("--cases", cases, "Budget override");
  run->add_option("--format", format, "json | csv | both")
      ->check(CLI::IsMember({"json", "csv", "both"}));

  std::string suite_name;
  CLI::App* suite = app.add_subcommand("suite", "Run a named acceptance suite");
  suite->add_option("name", suite_name, "golden | properties | roundtrip")->required();
  suite->add_option("--seed", seed, "Random seed");
  suite->add_option("--cases", cases, "Case budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  seed_given = run->count("--seed") > 0;

  if (run->parsed()) return run_scenario(scenario_path, out_dir, seed, seed_given, cases, format);
  return run_suite(suite_name, seed, cases);
}

}  // namespace
}  // namespace qdtm

int main(int argc, char** argv) {
  try {
    return qdtm::dispatch(argc, argv);
  } catch (const qdtm::Error& e) {
    qdtm::json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    qdtm::json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
