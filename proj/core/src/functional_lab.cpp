#include "qdtm/functional_lab.hpp"

#include "qdtm/error.hpp"
#include "qdtm/reconstruction.hpp"
#include "qdtm/serialization.hpp"

#include <functional>

namespace qdtm {

namespace {

PwlFunction random_signed(Rng& rng, const Space& space) {
  return random_pwl(rng, space, {});
}

PwlFunction random_nonneg(Rng& rng, const Space& space) {
  PwlOptions opts;
  opts.nonnegative = true;
  return random_pwl(rng, space, opts);
}

Rational random_scalar(Rng& rng, bool nonneg) {
  Rational a(rng.int_in(nonneg ? 0 : -8, 8), 2);
  return a;
}

struct LevelCCase {
  PwlFunction f, g;
  Rational c;
};

LevelCCase make_level_c(Rng& rng, const Space& space) {
  // g >= 0 supported in [w1, w2]; f = c on a neighborhood of supp g, f <= c.
  for (;;) {
    auto [w1, w2] = random_window(rng, space);
    const Rational margin = (w2 - w1) / 4;
    const Rational lo = w1 - margin, hi = w2 + margin;
    if (space.is_compact() && (lo - margin < space.lo() || hi + margin > space.hi()))
      continue;
    const Rational c(rng.int_in(1, 6), 2);
    std::vector<Breakpoint> fn;
    if (space.is_line()) {
      fn = {{lo - margin, 0}, {lo, c}, {hi, c}, {hi + margin, 0}};
    } else {
      fn = {{space.lo(), 0}, {lo - margin, 0}, {lo, c}, {hi, c}, {hi + margin, 0},
            {space.hi(), 0}};
      std::sort(fn.begin(), fn.end(),
                [](const Breakpoint& a, const Breakpoint& b) { return a.first < b.first; });
      fn.erase(std::unique(fn.begin(), fn.end(),
                           [](const Breakpoint& a, const Breakpoint& b) {
                             return a.first == b.first;
                           }),
               fn.end());
      if (fn.front().first != space.lo() || fn.back().first != space.hi()) continue;
    }
    const Rational peak(rng.int_in(1, 8), 4);
    std::vector<Breakpoint> gn{{w1, 0}, {(w1 + w2) / 2, peak}, {w2, 0}};
    if (space.is_compact()) {
      if (w1 != space.lo()) gn.insert(gn.begin(), {space.lo(), 0});
      if (w2 != space.hi()) gn.push_back({space.hi(), 0});
    }
    return {PwlFunction(space, std::move(fn)), PwlFunction(space, std::move(gn)), c};
  }
}

}  // namespace

CasePack generate_case(CaseKind kind, const Space& space, std::uint64_t seed) {
  Rng rng(seed);
  CasePack pack;
  switch (kind) {
    case CaseKind::DominatedPair: {
      auto [f, g] = random_dominated_pair(rng, space);
      pack.functions = {f, g};
      break;
    }
    case CaseKind::DisjointSupportPair: {
      auto [f, g] = random_disjoint_pair(rng, space);
      pack.functions = {f, g};
      break;
    }
    case CaseKind::PosNegOrthogonal: {
      auto [f, g] = random_pos_neg_orthogonal(rng, space);
      pack.functions = {f, g};
      break;
    }
    case CaseKind::ConePair: {
      const PwlFunction f = random_signed(rng, space);
      const auto [lo, hi] = range_bounds(f);
      const Rational dlo = rational_min(lo, Rational(-1));
      const Rational dhi = rational_max(hi, Rational(1));
      pack.functions = {f};
      pack.profiles = {random_monotone_profile(rng, dlo, dhi,
                                               ProfileDirection::NonDecreasing,
                                               space.is_line()),
                       random_monotone_profile(rng, dlo, dhi,
                                               ProfileDirection::NonDecreasing,
                                               space.is_line())};
      pack.scalars = {random_scalar(rng, true), random_scalar(rng, true)};
      break;
    }
    case CaseKind::ConstantShift: {
      require(space.is_compact(), "InvalidScenario",
              "constant shifts need a compact space");
      pack.functions = {random_signed(rng, space)};
      pack.scalars = {random_scalar(rng, false)};
      break;
    }
    case CaseKind::LevelC: {
      LevelCCase c = make_level_c(rng, space);
      pack.functions = {c.f, c.g};
      pack.scalars = {c.c};
      break;
    }
  }
  return pack;
}

namespace {

using Witness = std::optional<nlohmann::json>;

Witness equality_witness(const char* axiom, const Rational& lhs, const Rational& rhs,
                         std::initializer_list<std::pair<const char*, nlohmann::json>>
                             inputs) {
  if (lhs == rhs) return std::nullopt;
  nlohmann::json w{{"axiom", axiom}, {"lhs", rational_str(lhs)}, {"rhs", rational_str(rhs)}};
  for (const auto& [key, value] : inputs) w[key] = value;
  return w;
}

Witness order_witness(const char* axiom, const Rational& small, const Rational& big,
                      std::initializer_list<std::pair<const char*, nlohmann::json>>
                          inputs) {
  if (small <= big) return std::nullopt;
  nlohmann::json w{{"axiom", axiom},
                   {"smaller_value", rational_str(small)},
                   {"larger_value", rational_str(big)}};
  for (const auto& [key, value] : inputs) w[key] = value;
  return w;
}

struct AxiomSuite {
  const FunctionalHandle& rho;
  const Space& space;

  Witness hom(Rng& rng, bool nonneg_f, bool nonneg_a, const char* axiom) const {
    const PwlFunction f = nonneg_f ? random_nonneg(rng, space) : random_signed(rng, space);
    Rational a = random_scalar(rng, nonneg_a);
    if (nonneg_a && a == 0) a = Rational(1, 2);
    return equality_witness(axiom, rho(scale(f, a)), a * rho(f),
                            {{"f", to_json(f)}, {"a", rational_str(a)}});
  }

  Witness mono_nonneg(Rng& rng) const {
    auto [f, g] = random_dominated_pair(rng, space);
    return order_witness("monotone_nonneg", rho(g), rho(f),
                         {{"f", to_json(f)}, {"g", to_json(g)}});
  }

  Witness mono_general(Rng& rng) const {
    const PwlFunction f = random_signed(rng, space);
    const PwlFunction bump = random_nonneg(rng, space);
    const PwlFunction g = combine(f, scale(bump, -1), CombineOp::Add);
    return order_witness("monotone", rho(g), rho(f),
                         {{"f", to_json(f)}, {"g", to_json(g)}});
  }

  Witness mono_nonpos(Rng& rng) const {
    const PwlFunction f = scale(random_nonneg(rng, space), -1);
    const PwlFunction bump = random_nonneg(rng, space);
    const PwlFunction g = combine(f, scale(bump, -1), CombineOp::Add);
    return order_witness("monotone_nonpos", rho(g), rho(f),
                         {{"f", to_json(f)}, {"g", to_json(g)}});
  }

  Witness orth(Rng& rng, int sign_f, int sign_g, const char* axiom) const {
    auto [f, g] = random_disjoint_pair(rng, space);
    if (sign_f < 0) f = scale(f, -1);
    if (sign_g < 0) g = scale(g, -1);
    const PwlFunction sum = combine(f, g, CombineOp::Add);
    return equality_witness(axiom, rho(sum), rho(f) + rho(g),
                            {{"f", to_json(f)}, {"g", to_json(g)}});
  }

  Witness orth_general(Rng& rng) const {
    return orth(rng, rng.coin() ? 1 : -1, rng.coin() ? 1 : -1, "orthogonal_additive");
  }

  Witness cone(Rng& rng, ProfileDirection dir, const char* axiom) const {
    const PwlFunction f = random_signed(rng, space);
    const auto [lo, hi] = range_bounds(f);
    const Rational dlo = rational_min(lo, Rational(-1));
    const Rational dhi = rational_max(hi, Rational(1));
    const bool anchor = space.is_line();
    const MonotoneProfile phi = random_monotone_profile(rng, dlo, dhi, dir, anchor);
    const MonotoneProfile psi = random_monotone_profile(rng, dlo, dhi, dir, anchor);
    const Rational a = random_scalar(rng, true), b = random_scalar(rng, true);
    const PwlFunction cf = compose_monotone(phi, f);
    const PwlFunction cg = compose_monotone(psi, f);
    const PwlFunction mix = combine(scale(cf, a), scale(cg, b), CombineOp::Add);
    return equality_witness(axiom, rho(mix), a * rho(cf) + b * rho(cg),
                            {{"f", to_json(f)},
                             {"phi", to_json(phi.profile())},
                             {"psi", to_json(psi.profile())},
                             {"a", rational_str(a)},
                             {"b", rational_str(b)}});
  }

  Witness level_c(Rng& rng) const {
    const LevelCCase c = make_level_c(rng, space);
    const Rational a = random_scalar(rng, true), b = random_scalar(rng, true);
    const PwlFunction mix = combine(scale(c.f, a), scale(c.g, b), CombineOp::Add);
    return equality_witness("level_c_conic", rho(mix), a * rho(c.f) + b * rho(c.g),
                            {{"f", to_json(c.f)},
                             {"g", to_json(c.g)},
                             {"a", rational_str(a)},
                             {"b", rational_str(b)}});
  }

  Witness constant_shift(Rng& rng) const {
    const PwlFunction f = random_signed(rng, space);
    const Rational c = random_scalar(rng, false);
    const PwlFunction cf = constant_function(space, c);
    return equality_witness("constant_condition", rho(combine(f, cf, CombineOp::Add)),
                            rho(f) + rho(cf),
                            {{"f", to_json(f)}, {"c", rational_str(c)}});
  }

  Witness positivity(Rng& rng) const {
    const PwlFunction f = random_nonneg(rng, space);
    const Rational v = rho(f);
    if (v >= 0) return std::nullopt;
    return nlohmann::json{
        {"axiom", "positive"}, {"f", to_json(f)}, {"value", rational_str(v)}};
  }

  Witness subalgebra_additive(Rng& rng, const PwlFunction& h) const {
    const auto [lo, hi] = range_bounds(h);
    const Rational dlo = rational_min(lo, Rational(-1));
    const Rational dhi = rational_max(hi, Rational(1));
    const bool anchor = space.is_line();
    const Profile phi = random_profile(rng, dlo, dhi, anchor);
    const Profile psi = random_profile(rng, dlo, dhi, anchor);
    const PwlFunction cf = compose_profile(phi, h);
    const PwlFunction cg = compose_profile(psi, h);
    return equality_witness("subalgebra_additive", rho(combine(cf, cg, CombineOp::Add)),
                            rho(cf) + rho(cg),
                            {{"h", to_json(h)},
                             {"phi", to_json(phi)},
                             {"psi", to_json(psi)}});
  }

  Witness additivity(Rng& rng) const {
    const PwlFunction f = random_signed(rng, space);
    const PwlFunction g = random_signed(rng, space);
    return equality_witness("additive", rho(combine(f, g, CombineOp::Add)),
                            rho(f) + rho(g), {{"f", to_json(f)}, {"g", to_json(g)}});
  }
};

using Axiom = std::function<Witness(Rng&)>;

ClassVerdict run_class(const std::vector<Axiom>& axioms, int budget, Rng& rng) {
  ClassVerdict verdict;
  for (int i = 0; i < budget; ++i) {
    Witness w = axioms[static_cast<std::size_t>(i) % axioms.size()](rng);
    ++verdict.cases;
    if (w) {
      verdict.verdict = Verdict::Fail;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

ClassificationReport classify(const FunctionalHandle& rho, int budget,
                              std::uint64_t seed) {
  require(rho.domain_tag() != DomainTag::NonnegativeCc, "OutOfDomain",
          "classification probes signed functions; widen the handle domain");
  const Space& space = rho.space();
  const AxiomSuite ax{rho, space};
  Rng root(seed);

  auto hom = [&](bool nonneg_f, bool nonneg_a, const char* name) {
    return Axiom([&ax, nonneg_f, nonneg_a, name](Rng& rng) {
      return ax.hom(rng, nonneg_f, nonneg_a, name);
    });
  };

  std::map<std::string, std::vector<Axiom>> classes;
  classes["d"] = {hom(true, true, "pos_homogeneous_nonneg"),
                  [&](Rng& r) { return ax.mono_nonneg(r); },
                  [&](Rng& r) { return ax.orth(r, 1, 1, "orthogonal_nonneg"); }};
  classes["c"] = {hom(true, true, "pos_homogeneous_nonneg"),
                  [&](Rng& r) { return ax.mono_nonneg(r); },
                  [&](Rng& r) { return ax.orth(r, 1, 1, "orthogonal_nonneg"); },
                  [&](Rng& r) { return ax.orth(r, 1, -1, "orthogonal_mixed"); }};
  classes["s"] = {hom(false, false, "homogeneous"),
                  [&](Rng& r) { return ax.mono_general(r); },
                  [&](Rng& r) { return ax.orth_general(r); }};
  classes["r"] = {hom(false, true, "pos_homogeneous"),
                  [&](Rng& r) { return ax.mono_nonneg(r); },
                  [&](Rng& r) { return ax.orth(r, 1, 1, "orthogonal_nonneg"); },
                  [&](Rng& r) { return ax.orth(r, 1, -1, "orthogonal_mixed"); }};
  classes["l"] = {hom(false, true, "pos_homogeneous"),
                  [&](Rng& r) { return ax.mono_nonpos(r); },
                  [&](Rng& r) { return ax.orth(r, -1, -1, "orthogonal_nonpos"); },
                  [&](Rng& r) { return ax.orth(r, 1, -1, "orthogonal_mixed"); }};
  classes["p_conic"] = {
      [&](Rng& r) { return ax.orth(r, 1, 1, "orthogonal_nonneg"); },
      [&](Rng& r) { return ax.mono_nonneg(r); },
      [&](Rng& r) { return ax.cone(r, ProfileDirection::NonDecreasing, "conic_upper"); },
      [&](Rng& r) { return ax.level_c(r); }};
  classes["n_conic"] = {
      [&](Rng& r) { return ax.orth(r, -1, -1, "orthogonal_nonpos"); },
      [&](Rng& r) { return ax.mono_nonpos(r); },
      [&](Rng& r) { return ax.cone(r, ProfileDirection::NonIncreasing, "conic_lower"); }};
  classes["quasi_linear"] = {
      hom(false, false, "homogeneous"),
      [&](Rng& r) { return ax.positivity(r); },
      [&](Rng& r) {
        const PwlFunction h = random_signed(r, space);
        return ax.subalgebra_additive(r, h);
      }};
  classes["linear"] = {hom(false, false, "homogeneous"),
                       [&](Rng& r) { return ax.additivity(r); }};

  if (space.is_compact()) {
    classes["r"].push_back([&](Rng& r) { return ax.constant_shift(r); });
    classes["l"].push_back([&](Rng& r) { return ax.constant_shift(r); });
  }

  ClassificationReport report;
  for (auto& [name, axioms] : classes) {
    Rng rng = root.spawn();
    report.verdicts[name] = run_class(axioms, budget, rng);
    if (space.is_line() && (name == "r" || name == "l"))
      report.verdicts[name].skipped_clauses.push_back("constant_condition");
  }

  static const std::pair<const char*, const char*> kImplications[] = {
      {"linear", "quasi_linear"}, {"quasi_linear", "s"}, {"s", "r"},
      {"s", "l"},                 {"s", "c"},            {"r", "c"},
      {"c", "d"},                 {"p_conic", "r"},      {"n_conic", "l"}};
  for (const auto& [from, to] : kImplications) {
    if (report.verdicts.at(from).verdict == Verdict::Pass &&
        report.verdicts.at(to).verdict == Verdict::Fail)
      report.hierarchy_consistent = false;
  }

  if (report.verdicts.at("d").verdict == Verdict::Pass && rho.monotone_on_nonneg())
    report.norm = norm_estimate(rho, RampSchedule::standard());
  return report;
}

CheckReport quasi_linearity_check(const FunctionalHandle& rho, const PwlFunction& f,
                                  int budget, std::uint64_t seed) {
  CheckReport report{"quasi_linearity", 0, {}};
  const AxiomSuite ax{rho, rho.space()};
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) {
    Witness w = ax.subalgebra_additive(rng, f);
    ++report.cases;
    if (w) {
      report.failures.push_back(*std::move(w));
      return report;  // first witness is enough
    }
  }
  return report;
}

}  // namespace qdtm
