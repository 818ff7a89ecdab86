#pragma once

#include "qdtm/interval_set.hpp"
#include "qdtm/measure.hpp"
#include "qdtm/pwl.hpp"
#include "qdtm/rational.hpp"
#include "qdtm/space.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qdtm {

/// Deterministic source of random rational data. Raw mt19937_64 words are
/// reduced by hand so the same seed yields the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t word() { return gen_(); }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(word() % span);
  }

  bool coin() { return (word() & 1) != 0; }

  /// k / 2^j with j <= max_pow and value inside [lo, hi].
  Rational dyadic(int max_pow, std::int64_t lo, std::int64_t hi) {
    const std::int64_t den = std::int64_t(1) << int_in(0, max_pow);
    return Rational(int_in(lo * den, hi * den), den);
  }

  /// A point of the space from a dyadic grid (den <= 2^max_pow).
  Rational grid_point(const Space& space, int max_pow = 4) {
    if (space.is_line()) return dyadic(max_pow, -4, 4);
    const std::int64_t den = std::int64_t(1) << max_pow;
    return space.lo() + (space.hi() - space.lo()) * Rational(int_in(0, den), den);
  }

  Rng spawn() { return Rng(word()); }

 private:
  std::mt19937_64 gen_;
};

/// Two distinct grid points in increasing order.
std::pair<Rational, Rational> random_window(Rng& rng, const Space& space);

IntervalSet random_compact_set(Rng& rng, const Space& space, int max_parts = 3);
IntervalSet random_open_set(Rng& rng, const Space& space, int max_parts = 3);
/// Open or closed (closed includes co-bounded sets on the line).
IntervalSet random_admissible_set(Rng& rng, const Space& space);

struct PwlOptions {
  int max_interior_nodes = 4;
  int max_pow = 3;          // grid denominator 2^max_pow
  std::int64_t y_lo = -3;
  std::int64_t y_hi = 3;
  bool nonnegative = false;
  bool range01 = false;     // clamp values into [0, 1]
};

PwlFunction random_pwl(Rng& rng, const Space& space, const PwlOptions& opts = {});

/// 0 <= second <= first pointwise.
std::pair<PwlFunction, PwlFunction> random_dominated_pair(Rng& rng, const Space& space);
/// Nonnegative pair with disjoint supports.
std::pair<PwlFunction, PwlFunction> random_disjoint_pair(Rng& rng, const Space& space);
/// f >= 0, g <= 0, f * g = 0.
std::pair<PwlFunction, PwlFunction> random_pos_neg_orthogonal(Rng& rng, const Space& space);

/// Monotone profile covering [lo, hi]; anchored variants fix phi(0) = 0
/// (requires lo <= 0 <= hi).
MonotoneProfile random_monotone_profile(Rng& rng, const Rational& lo, const Rational& hi,
                                        ProfileDirection direction, bool anchor_zero);
/// Arbitrary zigzag profile covering [lo, hi], optionally with phi(0) = 0.
Profile random_profile(Rng& rng, const Rational& lo, const Rational& hi, bool anchor_zero);

/// Random member of the standard measure family on this space.
Dtm random_catalog_measure(Rng& rng, const Space& space);
/// Random measure-type member (Dirac / Lebesgue / conic combos): always a
/// topological measure.
Dtm random_measure_type(Rng& rng, const Space& space);

}  // namespace qdtm
