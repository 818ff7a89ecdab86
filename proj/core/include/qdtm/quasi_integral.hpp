#pragma once

#include "qdtm/distribution.hpp"
#include "qdtm/measure.hpp"
#include "qdtm/pwl.hpp"
#include "qdtm/validation.hpp"

#include <functional>
#include <string>
#include <variant>

namespace qdtm {

/// Quasi-integral of f against mu through the right measure:
///   R(f) = int id dr = int_a^b R1(t) dt + a * mu(X),   [a, b] = [min f, max f].
/// The value is also computed through the Stieltjes route int id dr and the
/// two must agree exactly; a mismatch is an internal error, not a result.
Rational quasi_integral_R(const Dtm& mu, const PwlFunction& f);
/// Dual value through the left measure: L(f) = int id dl.
Rational quasi_integral_L(const Dtm& mu, const PwlFunction& f);

/// Ordinary integral for measure-type expressions (Dirac, LebesgueOn and
/// conic combinations); the independent linear oracle. Throws
/// Error("NotLinearMeasure") when a nondegenerate SimpleContains occurs.
Rational linear_integral(const Dtm& mu, const PwlFunction& f);

/// (min over D, max over D): the closed-form oracle for the functionals
/// induced by SimpleContains(D).
std::pair<Rational, Rational> oracle_min_max(const Interval& d, const PwlFunction& f);

enum class DomainTag { NonnegativeCc, Cc, ContinuousOnCompact };

struct ProvInducedR { Dtm mu; };
struct ProvInducedL { Dtm mu; };
struct ProvMinOverD { Interval d; };
struct ProvMaxOverD { Interval d; };
struct ProvLinearIntegral { Dtm mu; };
struct ProvUserCombination { std::string description; };
using Provenance = std::variant<ProvInducedR, ProvInducedL, ProvMinOverD, ProvMaxOverD,
                                ProvLinearIntegral, ProvUserCombination>;

/// A functional f -> value with domain metadata. Handles are immutable and
/// re-entrant; evaluation validates the space and the domain tag.
class FunctionalHandle {
 public:
  using Evaluator = std::function<Rational(const PwlFunction&)>;

  static FunctionalHandle induced_R(const Dtm& mu);
  static FunctionalHandle induced_L(const Dtm& mu);
  static FunctionalHandle min_over(const Space& space, const Interval& d);
  static FunctionalHandle max_over(const Space& space, const Interval& d);
  static FunctionalHandle linear(const Dtm& mu);
  static FunctionalHandle user(Space space, DomainTag tag, std::string description,
                               Evaluator fn, bool monotone_on_nonneg);

  Rational operator()(const PwlFunction& f) const;

  const Space& space() const { return space_; }
  DomainTag domain_tag() const { return tag_; }
  const Provenance& provenance() const { return prov_; }
  bool monotone_on_nonneg() const { return monotone_on_nonneg_; }
  std::string describe() const;

 private:
  FunctionalHandle(Space space, DomainTag tag, Provenance prov, Evaluator fn,
                   bool monotone)
      : space_(std::move(space)), tag_(tag), prov_(std::move(prov)),
        eval_(std::move(fn)), monotone_on_nonneg_(monotone) {}

  Space space_;
  DomainTag tag_;
  Provenance prov_;
  Evaluator eval_;
  bool monotone_on_nonneg_;
};

/// R(a(phi o f) + b(psi o f)) = a R(phi o f) + b R(psi o f) for nondecreasing
/// profiles, and dually for L with nonincreasing ones.
CheckReport conic_check_on_cone(const Dtm& mu, const PwlFunction& f,
                                const MonotoneProfile& phi, const MonotoneProfile& psi,
                                const Rational& a, const Rational& b);

/// sum_i R(f_i) = R(f) for the n-piece cone partition of f (range in [0,1]).
CheckReport partition_identity_check(const Dtm& mu, const PwlFunction& f, int n);

/// L(-f) = -R(f).
CheckReport duality_check(const Dtm& mu, const PwlFunction& f);

/// The exact product f*g when on every common segment at most one factor is
/// sloped; otherwise throws Error("ProductNotPwl").
PwlFunction pwl_product(const PwlFunction& f, const PwlFunction& g);

/// rho_g(f) = rho(f*g) for g >= 0 on the guarded product subclass.
Rational rho_g(const FunctionalHandle& rho, const PwlFunction& g, const PwlFunction& f);

/// |R(f) - R(g)| <= ||f - g|| * mu(K) over the common compact support hull K.
CheckReport lipschitz_check(const Dtm& mu, const PwlFunction& f, const PwlFunction& g);

/// R_{a mu + b nu}(f) = a R_mu(f) + b R_nu(f).
CheckReport conic_in_measure_check(const Dtm& mu, const Dtm& nu, const Rational& a,
                                   const Rational& b, const PwlFunction& f);

/// R_{mu + sigma}(f) >= R_mu(f) for f >= 0.
CheckReport order_check(const Dtm& mu, const Dtm& sigma, const PwlFunction& f);

}  // namespace qdtm
