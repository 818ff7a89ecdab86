#include "qdtm/rational.hpp"

#include "qdtm/error.hpp"

#include <cctype>

namespace qdtm {

namespace {

bool parse_integer(std::string_view text, BigInt* out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  *out = negative ? BigInt(-value) : value;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = true;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, &num);
  } else {
    ok = parse_integer(text.substr(0, slash), &num) &&
         parse_integer(text.substr(slash + 1), &den);
  }
  if (!ok) fail("InvalidRational", "cannot parse rational '" + std::string(text) + "'");
  if (den == 0) fail("InvalidRational", "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace qdtm
