#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qdtm {

// Every quantity in this library is an exact rational. The identities being
// checked are equalities, so no floating point appears anywhere. Expression
// templates are off: plain value semantics for ternaries and auto.
using BigInt = boost::multiprecision::cpp_int;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// Parse "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// Error("InvalidRational") on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical string form: "p" when the denominator is one, else "p/q".
std::string rational_str(const Rational& value);

inline Rational rational_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline const Rational& rational_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& rational_max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace qdtm
