#include "qdtm/quasi_integral.hpp"

#include "qdtm/error.hpp"
#include "qdtm/serialization.hpp"

#include <algorithm>

namespace qdtm {

Rational quasi_integral_R(const Dtm& mu, const PwlFunction& f) {
  const DistributionBundle bundle = distribution_bundle(mu, f);
  const Rational via_bundle =
      bundle.R1.riemann_integral(bundle.hull_lo, bundle.hull_hi) +
      bundle.hull_lo * bundle.mass;
  const Rational via_stieltjes = stieltjes_integral_id(right_measure(bundle));
  require(via_bundle == via_stieltjes, "InternalInvariant",
          "the two quasi-integral routes disagree");
  return via_bundle;
}

Rational quasi_integral_L(const Dtm& mu, const PwlFunction& f) {
  const DistributionBundle bundle = distribution_bundle(mu, f);
  const Rational via_bundle =
      -bundle.L1.riemann_integral(bundle.hull_lo, bundle.hull_hi) +
      bundle.hull_hi * bundle.mass;
  const Rational via_stieltjes = stieltjes_integral_id(left_measure(bundle));
  require(via_bundle == via_stieltjes, "InternalInvariant",
          "the two quasi-integral routes disagree");
  return via_bundle;
}

Rational linear_integral(const Dtm& mu, const PwlFunction& f) {
  require_same_space(mu.space(), f.space());
  struct Visitor {
    const PwlFunction& f;
    Rational operator()(const Dtm::SimpleContains& n) const {
      if (n.d.singleton()) return f(*n.d.lo);
      fail("NotLinearMeasure", "simple-contains node has no linear integral");
    }
    Rational operator()(const Dtm::Dirac& n) const { return f(n.x); }
    Rational operator()(const Dtm::LebesgueOn& n) const {
      // Exact trapezoid integration of f over I.
      std::vector<Rational> cuts{*n.i.lo, *n.i.hi};
      for (const auto& node : f.nodes())
        if (node.first > *n.i.lo && node.first < *n.i.hi) cuts.push_back(node.first);
      std::sort(cuts.begin(), cuts.end());
      Rational sum = 0;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        sum += (f(cuts[i]) + f(cuts[i + 1])) / 2 * (cuts[i + 1] - cuts[i]);
      return sum;
    }
    Rational operator()(const Dtm::ConicCombo& n) const {
      Rational sum = 0;
      for (const auto& [coeff, sub] : n.terms)
        sum += coeff * linear_integral(*sub, f);
      return sum;
    }
  };
  return std::visit(Visitor{f}, mu.node());
}

std::pair<Rational, Rational> oracle_min_max(const Interval& d, const PwlFunction& f) {
  return restricted_extrema(f, IntervalSet(d));
}

namespace {

DomainTag induced_tag(const Space& space) {
  return space.is_compact() ? DomainTag::ContinuousOnCompact : DomainTag::Cc;
}

}  // namespace

FunctionalHandle FunctionalHandle::induced_R(const Dtm& mu) {
  return FunctionalHandle(
      mu.space(), induced_tag(mu.space()), ProvInducedR{mu},
      [mu](const PwlFunction& f) { return quasi_integral_R(mu, f); }, true);
}

FunctionalHandle FunctionalHandle::induced_L(const Dtm& mu) {
  return FunctionalHandle(
      mu.space(), induced_tag(mu.space()), ProvInducedL{mu},
      [mu](const PwlFunction& f) { return quasi_integral_L(mu, f); }, true);
}

FunctionalHandle FunctionalHandle::min_over(const Space& space, const Interval& d) {
  return FunctionalHandle(
      space, induced_tag(space), ProvMinOverD{d},
      [d](const PwlFunction& f) { return oracle_min_max(d, f).first; }, true);
}

FunctionalHandle FunctionalHandle::max_over(const Space& space, const Interval& d) {
  return FunctionalHandle(
      space, induced_tag(space), ProvMaxOverD{d},
      [d](const PwlFunction& f) { return oracle_min_max(d, f).second; }, true);
}

FunctionalHandle FunctionalHandle::linear(const Dtm& mu) {
  require(mu.is_measure_type(), "NotLinearMeasure",
          "linear handles need a measure-type expression");
  return FunctionalHandle(
      mu.space(), induced_tag(mu.space()), ProvLinearIntegral{mu},
      [mu](const PwlFunction& f) { return linear_integral(mu, f); }, true);
}

FunctionalHandle FunctionalHandle::user(Space space, DomainTag tag,
                                        std::string description, Evaluator fn,
                                        bool monotone_on_nonneg) {
  return FunctionalHandle(std::move(space), tag,
                          ProvUserCombination{std::move(description)}, std::move(fn),
                          monotone_on_nonneg);
}

Rational FunctionalHandle::operator()(const PwlFunction& f) const {
  require_same_space(space_, f.space());
  if (tag_ == DomainTag::NonnegativeCc)
    require(range_bounds(f).first >= 0, "OutOfDomain",
            "this functional accepts nonnegative functions only");
  return eval_(f);
}

std::string FunctionalHandle::describe() const {
  struct Visitor {
    std::string operator()(const ProvInducedR& p) const {
      return "R[" + p.mu.describe() + "]";
    }
    std::string operator()(const ProvInducedL& p) const {
      return "L[" + p.mu.describe() + "]";
    }
    std::string operator()(const ProvMinOverD& p) const {
      return "min_over" + interval_str(p.d);
    }
    std::string operator()(const ProvMaxOverD& p) const {
      return "max_over" + interval_str(p.d);
    }
    std::string operator()(const ProvLinearIntegral& p) const {
      return "integral[" + p.mu.describe() + "]";
    }
    std::string operator()(const ProvUserCombination& p) const { return p.description; }
  };
  return std::visit(Visitor{}, prov_);
}

CheckReport conic_check_on_cone(const Dtm& mu, const PwlFunction& f,
                                const MonotoneProfile& phi, const MonotoneProfile& psi,
                                const Rational& a, const Rational& b) {
  require(a >= 0 && b >= 0, "InvalidProfile", "cone coefficients must be >= 0");
  require(phi.direction() == psi.direction(), "InvalidProfile",
          "cone pair must share a direction");
  CheckReport report{"conic_on_cone", 1, {}};
  const bool upper = phi.direction() == ProfileDirection::NonDecreasing;
  auto rho = [&](const PwlFunction& h) {
    return upper ? quasi_integral_R(mu, h) : quasi_integral_L(mu, h);
  };
  const PwlFunction g = compose_monotone(phi, f);
  const PwlFunction h = compose_monotone(psi, f);
  const PwlFunction mix = combine(scale(g, a), scale(h, b), CombineOp::Add);
  const Rational lhs = rho(mix);
  const Rational rhs = a * rho(g) + b * rho(h);
  if (lhs != rhs) {
    report.failures.push_back({{"f", to_json(f)},
                               {"phi", to_json(phi.profile())},
                               {"psi", to_json(psi.profile())},
                               {"a", rational_str(a)},
                               {"b", rational_str(b)},
                               {"lhs", rational_str(lhs)},
                               {"rhs", rational_str(rhs)}});
  }
  return report;
}

CheckReport partition_identity_check(const Dtm& mu, const PwlFunction& f, int n) {
  CheckReport report{"partition_identity", 1, {}};
  const std::vector<PwlFunction> pieces = cone_partition(f, n);
  PwlFunction total = zero_function(f.space());
  Rational sum = 0;
  for (const PwlFunction& piece : pieces) {
    sum += quasi_integral_R(mu, piece);
    total = combine(total, piece, CombineOp::Add);
  }
  const Rational direct = quasi_integral_R(mu, f);
  if (!(total == f) || sum != direct) {
    report.failures.push_back({{"f", to_json(f)},
                               {"n", n},
                               {"sum_of_pieces", rational_str(sum)},
                               {"direct", rational_str(direct)},
                               {"pieces_resum_exact", total == f}});
  }
  return report;
}

CheckReport duality_check(const Dtm& mu, const PwlFunction& f) {
  CheckReport report{"duality", 1, {}};
  const Rational lhs = quasi_integral_L(mu, scale(f, -1));
  const Rational rhs = -quasi_integral_R(mu, f);
  if (lhs != rhs) {
    report.failures.push_back(
        {{"f", to_json(f)}, {"L(-f)", rational_str(lhs)}, {"-R(f)", rational_str(rhs)}});
  }
  return report;
}

PwlFunction pwl_product(const PwlFunction& f, const PwlFunction& g) {
  require_same_space(f.space(), g.space());
  std::vector<Rational> xs;
  for (const auto& n : f.nodes()) xs.push_back(n.first);
  for (const auto& n : g.nodes()) xs.push_back(n.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const bool f_sloped = f(xs[i]) != f(xs[i + 1]);
    const bool g_sloped = g(xs[i]) != g(xs[i + 1]);
    if (f_sloped && g_sloped)
      fail("ProductNotPwl", "both factors sloped on [" + rational_str(xs[i]) + ", " +
                                rational_str(xs[i + 1]) + "]");
  }
  std::vector<Breakpoint> nodes;
  nodes.reserve(xs.size());
  for (const Rational& x : xs) nodes.push_back({x, f(x) * g(x)});
  return PwlFunction(f.space(), std::move(nodes));
}

Rational rho_g(const FunctionalHandle& rho, const PwlFunction& g, const PwlFunction& f) {
  require(range_bounds(g).first >= 0, "OutOfDomain", "rho_g needs g >= 0");
  return rho(pwl_product(f, g));
}

CheckReport lipschitz_check(const Dtm& mu, const PwlFunction& f, const PwlFunction& g) {
  require(range_bounds(f).first >= 0 && range_bounds(g).first >= 0, "OutOfDomain",
          "lipschitz check is for nonnegative functions");
  CheckReport report{"lipschitz", 1, {}};
  const IntervalSet joint = set_union(support(f), support(g));
  IntervalSet k;
  if (!joint.empty()) {
    k = IntervalSet(Interval::closed(*joint.parts().front().lo,
                                     *joint.parts().back().hi));
  }
  const Rational bound = sup_norm_diff(f, g) * (k.empty() ? Rational(0) : mu(k));
  const Rational gap =
      rational_abs(quasi_integral_R(mu, f) - quasi_integral_R(mu, g));
  if (gap > bound) {
    report.failures.push_back({{"f", to_json(f)},
                               {"g", to_json(g)},
                               {"K", to_json(k)},
                               {"gap", rational_str(gap)},
                               {"bound", rational_str(bound)}});
  }
  return report;
}

CheckReport conic_in_measure_check(const Dtm& mu, const Dtm& nu, const Rational& a,
                                   const Rational& b, const PwlFunction& f) {
  CheckReport report{"conic_in_measure", 1, {}};
  const Dtm mix = Dtm::combo(mu.space(), {{a, mu}, {b, nu}});
  const Rational lhs = quasi_integral_R(mix, f);
  const Rational rhs = a * quasi_integral_R(mu, f) + b * quasi_integral_R(nu, f);
  if (lhs != rhs) {
    report.failures.push_back(
        {{"f", to_json(f)}, {"lhs", rational_str(lhs)}, {"rhs", rational_str(rhs)}});
  }
  return report;
}

CheckReport order_check(const Dtm& mu, const Dtm& sigma, const PwlFunction& f) {
  require(range_bounds(f).first >= 0, "OutOfDomain", "order check needs f >= 0");
  CheckReport report{"order_in_measure", 1, {}};
  const Dtm sum = Dtm::combo(mu.space(), {{1, mu}, {1, sigma}});
  const Rational lo = quasi_integral_R(mu, f);
  const Rational hi = quasi_integral_R(sum, f);
  if (hi < lo) {
    report.failures.push_back(
        {{"f", to_json(f)}, {"R_mu", rational_str(lo)}, {"R_mu_plus_sigma", rational_str(hi)}});
  }
  return report;
}

}  // namespace qdtm
