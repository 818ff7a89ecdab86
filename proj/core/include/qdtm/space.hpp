#pragma once

#include "qdtm/error.hpp"
#include "qdtm/rational.hpp"

namespace qdtm {

/// The underlying space: the whole real line or a compact interval [lo, hi].
/// "Open" and "compact" are always relative to the chosen space, so the
/// space travels with every function and measure.
class Space {
 public:
  enum class Kind { Line, Compact };

  static Space line() { return Space(Kind::Line, 0, 0); }

  static Space compact(Rational lo, Rational hi) {
    require(lo < hi, "InvalidSpace", "compact interval needs lo < hi");
    return Space(Kind::Compact, std::move(lo), std::move(hi));
  }

  Kind kind() const { return kind_; }
  bool is_line() const { return kind_ == Kind::Line; }
  bool is_compact() const { return kind_ == Kind::Compact; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& x) const {
    return is_line() || (lo_ <= x && x <= hi_);
  }

  friend bool operator==(const Space& a, const Space& b) {
    if (a.kind_ != b.kind_) return false;
    return a.is_line() || (a.lo_ == b.lo_ && a.hi_ == b.hi_);
  }

 private:
  Space(Kind kind, Rational lo, Rational hi)
      : kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Kind kind_;
  Rational lo_, hi_;
};

inline void require_same_space(const Space& a, const Space& b) {
  require(a == b, "SpaceMismatch", "operands live on different spaces");
}

}  // namespace qdtm
