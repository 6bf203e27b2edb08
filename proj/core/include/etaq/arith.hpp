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

#ifndef ETAQ_ARITH_HPP
#define ETAQ_ARITH_HPP

#include <cstdint>
#include <vector>

#include "etaq/rational.hpp"

namespace etaq::arith {

/// A prime power modulus l^s.
class PrimePower {
 public:
  /// Throws NotPrime unless `prime` is prime, InvalidArgument unless
  /// exponent >= 1 and prime^exponent fits in 62 bits.
  PrimePower(std::uint64_t prime, unsigned exponent = 1);

  std::uint64_t prime() const noexcept { return prime_; }
  unsigned exponent() const noexcept { return exponent_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t prime_;
  unsigned exponent_;
  std::uint64_t modulus_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi].
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Distinct prime divisors of |n| in increasing order; n != 0.
std::vector<std::uint64_t> prime_divisors(std::int64_t n);

/// Exponent of p in n. Throws UndefinedValuation for n = 0.
unsigned ord_p(const Integer& n, std::uint64_t p);
unsigned ord_p(std::int64_t n, std::uint64_t p);

/// Legendre's formula: sum_{t>=1} floor(n / p^t) = ord_p(n!).
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// b^n * prod_{p | b} p^{ord_p(n!)}: the predicted reduced denominator of
/// p_k(n) for k = a/b.
Integer denom_prediction(const FracExponent& k, std::uint64_t n);

/// Legendre symbol (a | l) by Euler's criterion. Throws NotOddPrime.
int legendre_symbol(std::int64_t a, std::uint64_t l);

/// sum_{d | n} d^power, n >= 1, by divisor enumeration.
Integer divisor_power_sum(std::uint64_t n, unsigned power);
inline Integer sigma3(std::uint64_t n) { return divisor_power_sum(n, 3); }
inline Integer sigma5(std::uint64_t n) { return divisor_power_sum(n, 5); }

/// x^{-1} mod m in [0, m). Throws NotInvertible when gcd(x, m) > 1.
std::uint64_t mod_inverse(std::int64_t x, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Reduces x modulo m, where den(x) must be a unit mod m.
/// Throws NotInvertible otherwise.
std::uint64_t reduce_mod(const Rational& x, std::uint64_t m);

}  // namespace etaq::arith

#endif  // ETAQ_ARITH_HPP
