#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "senslab/errors.hpp"

namespace senslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// count / 2^n, exact.
inline Rational dyadic(std::uint64_t count, unsigned n) {
  return Rational(BigInt(count), BigInt(1) << n);
}

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Accepts "p/q", an integer, or a finite decimal such as "0.05".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational { throw ParameterError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) return fail();
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') fail();
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") return fail();
    return Rational(parse_int(digits), pow_big(BigInt(10), static_cast<unsigned>(frac.size())));
  }
  return Rational(parse_int(text));
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace senslab
