#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ortho/errors.hpp"

namespace ortho {

// Exact arbitrary-precision rational. The backend keeps every value
// canonical: denominator > 0 and gcd(|numerator|, denominator) == 1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe construction from a possibly negative or zero denominator.
inline Rational make_rational(Integer num, Integer den = 1) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Text form is "p" or "p/q": an optional leading '-', decimal digits, and
// an optional '/' followed by a positive decimal denominator.
inline Rational parse_rational(std::string_view text) {
  const auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError,
                "expected \"p\" or \"p/q\", got \"" + std::string(text) + "\"");

  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0)
    throw Error(ErrorCode::ParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(std::move(n), std::move(d));
}

inline std::optional<Rational> try_parse_rational(std::string_view text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ortho
