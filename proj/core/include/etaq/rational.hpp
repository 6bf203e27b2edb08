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

#ifndef ETAQ_RATIONAL_HPP
#define ETAQ_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace etaq {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision reduced fraction. GMP keeps mpq values canonical:
/// gcd(|num|, den) = 1, den >= 1, and zero is 0/1.
using Rational = mpq_class;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "a", "-a", "a/b" or "-a/b" (decimal). Throws InvalidArgument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// True when x has denominator 1.
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Reduces x modulo m into [0, m). m must be positive.
std::uint64_t mod_u64(const Integer& x, std::uint64_t m);

/// The exponent k = a/b of (q;q)_inf^k, always held in lowest terms with b >= 1.
class FracExponent {
 public:
  FracExponent() = default;
  FracExponent(std::int64_t a, std::int64_t b = 1);

  /// Accepts the same syntax as parse_rational; the value must fit in int64.
  static FracExponent parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational value() const { return Rational(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_))); }
  std::string to_string() const;

  FracExponent operator-() const { return {-num_, den_}; }
  friend FracExponent operator+(const FracExponent& x, const FracExponent& y);
  friend FracExponent operator*(const FracExponent& x, std::int64_t m);

  friend bool operator==(const FracExponent&, const FracExponent&) = default;
  friend std::strong_ordering operator<=>(const FracExponent& x, const FracExponent& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace etaq

#endif  // ETAQ_RATIONAL_HPP
