#pragma once

#include "qdtm/rational.hpp"

#include <vector>

namespace qdtm {

/// Monotone piecewise-affine function on the line with jump discontinuities.
///
/// Each breakpoint stores the left limit, the value at the point, and the
/// right limit; between breakpoints the function is affine from one node's
/// right limit to the next node's left limit, and constant outside the
/// breakpoint hull. Canonical form (no removable nodes) makes operator==
/// function equality.
class MonotonePwFunction {
 public:
  struct Node {
    Rational t, left, value, right;
    friend bool operator==(const Node& a, const Node& b) = default;
  };
  enum class Direction { NonDecreasing, NonIncreasing };

  MonotonePwFunction(Direction direction, std::vector<Node> nodes);

  static MonotonePwFunction constant(const Rational& c);

  Direction direction() const { return direction_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  Rational value(const Rational& t) const;
  Rational left_limit(const Rational& t) const;
  Rational right_limit(const Rational& t) const;

  /// Riemann integral over [a, b] (jumps have measure zero).
  Rational riemann_integral(const Rational& a, const Rational& b) const;

  std::vector<Rational> left_discontinuities() const;   // left != value
  std::vector<Rational> right_discontinuities() const;  // value != right
  bool left_continuous() const { return left_discontinuities().empty(); }
  bool right_continuous() const { return right_discontinuities().empty(); }

  friend bool operator==(const MonotonePwFunction& a, const MonotonePwFunction& b) {
    return a.nodes_ == b.nodes_;  // a constant is both directions
  }

  friend MonotonePwFunction add(const MonotonePwFunction& a, const MonotonePwFunction& b);
  friend MonotonePwFunction scale(const MonotonePwFunction& a, const Rational& c);

 private:
  Direction direction_;
  std::vector<Node> nodes_;
};

}  // namespace qdtm
