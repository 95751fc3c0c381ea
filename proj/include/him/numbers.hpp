/*
 * Copyright 2026 The HIM Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HIM_NUMBERS_HPP
#define HIM_NUMBERS_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "him/errors.hpp"

namespace him {

// Arbitrary-precision signed integer and exact rational. cpp_rational keeps
// values canonical (gcd-reduced, positive denominator), which the serializers
// and the bit-exact comparisons below rely on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(a / b) for b != 0 (cpp_int division truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_rational(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

/// Number of bits in |n|; 0 for n == 0.
inline std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  Integer a = n < 0 ? Integer(-n) : n;
  return static_cast<std::size_t>(boost::multiprecision::msb(a)) + 1;
}

inline Integer parse_integer(std::string_view text) {
  if (text.empty()) raise(ErrorCode::ParseError, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) raise(ErrorCode::ParseError, "sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      raise(ErrorCode::ParseError, "invalid integer literal: " + std::string(text));
  }
  return Integer(std::string(text));
}

/// Parses "n", "n/d", or a terminating decimal like "1.5" / "-0.6" into an
/// exact rational.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) raise(ErrorCode::ParseError, "zero denominator");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text));
  std::string_view head = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty()) raise(ErrorCode::ParseError, "trailing decimal point");
  bool negative = !head.empty() && head[0] == '-';
  Integer ip = head.empty() || head == "-" || head == "+"
                   ? Integer(0)
                   : parse_integer(head);
  if (ip < 0) ip = -ip;
  Integer fp = parse_integer(frac);
  if (fp < 0) raise(ErrorCode::ParseError, "sign inside fraction digits");
  Integer scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Rational value = Rational(ip) + Rational(fp, scale);
  return negative ? Rational(-value) : value;
}

inline std::string fraction_string(const Rational& x) {
  if (is_integral(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Exact decimal rendering when the expansion terminates within `max_digits`
/// fractional digits; falls back to "num/den" otherwise.
inline std::string decimal_string(const Rational& x, std::size_t max_digits = 24) {
  if (x < 0) return "-" + decimal_string(Rational(-x), max_digits);
  Integer num = numerator(x);
  Integer den = denominator(x);
  Integer ip = num / den;
  Integer rem = num % den;
  if (rem == 0) return ip.str();
  std::string digits;
  while (rem != 0 && digits.size() < max_digits) {
    rem *= 10;
    digits += static_cast<char>('0' + static_cast<int>(Integer(rem / den)));
    rem %= den;
  }
  if (rem != 0) return fraction_string(x);
  return ip.str() + "." + digits;
}

}  // namespace him

#endif  // HIM_NUMBERS_HPP
