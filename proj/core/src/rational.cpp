// Copyright 2026 The etaq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etaq/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "etaq/errors.hpp"

namespace etaq {

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::uint64_t mod_u64(const Integer& x, std::uint64_t m) {
  // mpz_fdiv_ui returns the non-negative remainder for positive m.
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

FracExponent::FracExponent(std::int64_t a, std::int64_t b) {
  if (b == 0) throw InvalidArgument("exponent denominator must be nonzero");
  if (b < 0) {
    a = -a;
    b = -b;
  }
  const std::int64_t g = std::gcd(a, b);
  num_ = a / g;
  den_ = b / g;
}

FracExponent FracExponent::parse(std::string_view text) {
  const Rational r = parse_rational(text);
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw InvalidArgument("exponent '" + std::string(text) + "' out of range");
  return {r.get_num().get_si(), r.get_den().get_si()};
}

std::string FracExponent::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

FracExponent operator+(const FracExponent& x, const FracExponent& y) {
  const __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
  const __int128 d = static_cast<__int128>(x.den_) * y.den_;
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  const __int128 g = a == 0 ? 1 : a;
  const __int128 rn = n / g, rd = d / g;
  if (rn > std::numeric_limits<std::int64_t>::max() || rn < std::numeric_limits<std::int64_t>::min() ||
      rd > std::numeric_limits<std::int64_t>::max())
    throw InvalidArgument("exponent sum overflows");
  return {static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd)};
}

FracExponent operator*(const FracExponent& x, std::int64_t m) {
  __int128 n = static_cast<__int128>(x.num_) * m;
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InvalidArgument("exponent product overflows");
  return {static_cast<std::int64_t>(n), x.den_};
}

std::strong_ordering operator<=>(const FracExponent& x, const FracExponent& y) {
  const __int128 l = static_cast<__int128>(x.num_) * y.den_;
  const __int128 r = static_cast<__int128>(y.num_) * x.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace etaq
