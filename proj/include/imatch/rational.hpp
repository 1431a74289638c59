// Copyright 2026 The imatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMATCH_RATIONAL_HPP
#define IMATCH_RATIONAL_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "imatch/errors.hpp"

namespace imatch {

/// Exact arithmetic for every bound comparison. Values stay far below the
/// int64 range at the graph sizes this library targets.
using Rational = boost::rational<std::int64_t>;

/// Decimal rendering with a fixed number of fractional digits, truncated
/// toward zero. Computed from the integer pair, so it is reproducible.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += std::to_string(num / den);
  std::int64_t rem = num % den;
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + rem / den);
      rem %= den;
    }
  }
  return out;
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p", "p/q" with integer p and positive integer q.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(text) + "'");
    std::string buf(s);
    char* end = nullptr;
    const long long v = std::strtoll(buf.c_str(), &end, 10);
    if (end != buf.c_str() + buf.size())
      throw Error(ErrorCode::ParseError, "not an integer: '" + buf + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorCode::ParseError, "denominator must be positive");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace imatch

#endif  // IMATCH_RATIONAL_HPP
