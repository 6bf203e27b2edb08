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

#include "etaq/arith.hpp"

#include <array>
#include <limits>
#include <string>

#include "etaq/errors.hpp"

namespace etaq::arith {

PrimePower::PrimePower(std::uint64_t prime, unsigned exponent) : prime_(prime), exponent_(exponent), modulus_(1) {
  if (!is_prime(prime)) throw NotPrime(std::to_string(prime) + " is not prime");
  if (exponent == 0) throw InvalidArgument("prime power exponent must be at least 1");
  for (unsigned i = 0; i < exponent; ++i) {
    if (modulus_ > (std::uint64_t{1} << 62) / prime) throw InvalidArgument("prime power modulus too large");
    modulus_ *= prime;
  }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::int64_t n) {
  if (n == 0) throw InvalidArgument("0 has no finite set of prime divisors");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

unsigned ord_p(const Integer& n, std::uint64_t p) {
  if (n == 0) throw UndefinedValuation("ord_p(0) is undefined");
  if (p < 2) throw InvalidArgument("valuation base must be at least 2");
  Integer m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

unsigned ord_p(std::int64_t n, std::uint64_t p) { return ord_p(Integer(static_cast<long>(n)), p); }

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw InvalidArgument("valuation base must be at least 2");
  std::uint64_t v = 0;
  for (std::uint64_t q = n / p; q != 0; q /= p) v += q;
  return v;
}

Integer denom_prediction(const FracExponent& k, std::uint64_t n) {
  const auto b = static_cast<unsigned long>(k.den());
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), b, n);
  if (b == 1) return d;
  for (auto p : prime_divisors(k.den())) {
    Integer pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, factorial_valuation(n, p));
    d *= pp;
  }
  return d;
}

int legendre_symbol(std::int64_t a, std::uint64_t l) {
  if (l == 2 || !is_prime(l)) throw NotOddPrime(std::to_string(l) + " is not an odd prime");
  const auto il = static_cast<std::int64_t>(l);
  const auto r = static_cast<std::uint64_t>(((a % il) + il) % il);
  if (r == 0) return 0;
  return pow_mod(r, (l - 1) / 2, l) == 1 ? 1 : -1;
}

Integer divisor_power_sum(std::uint64_t n, unsigned power) {
  if (n == 0) throw InvalidArgument("divisor sums need n >= 1");
  Integer s = 0, t;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(t.get_mpz_t(), d, power);
    s += t;
    const std::uint64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), e, power);
      s += t;
    }
  }
  return s;
}

std::uint64_t mod_inverse(std::int64_t x, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("modulus must be positive");
  if (m == 1) return 0;
  const auto im = static_cast<__int128>(m);
  __int128 a = ((static_cast<__int128>(x) % im) + im) % im;
  __int128 b = im, u = 1, v = 0;
  while (b != 0) {
    const __int128 q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw NotInvertible(std::to_string(x) + " is not invertible mod " + std::to_string(m));
  return static_cast<std::uint64_t>(((u % im) + im) % im);
}

std::uint64_t reduce_mod(const Rational& x, std::uint64_t m) {
  const std::uint64_t num = mod_u64(x.get_num(), m);
  if (x.get_den() == 1) return num;
  const std::uint64_t den = mod_u64(x.get_den(), m);
  const std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(den), m);
  return mul_mod(num, inv, m);
}

}  // namespace etaq::arith
