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

#include "etaq/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "etaq/errors.hpp"
#include "etaq/qseries.hpp"

namespace etaq::identities {

namespace {

using i64 = std::int64_t;

// Half-width of the enumeration window for a variable x whose quadratic
// exponent grows like x^2 / c: ceil(sqrt(c * n)) + 2.
i64 window(std::size_t n, double c, int extra) {
  return static_cast<i64>(std::ceil(std::sqrt(c * static_cast<double>(n)))) + 2 + extra;
}

i64 sign(i64 e) { return (e % 2 == 0) ? 1 : -1; }

class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : c_(n + 1) {}

  void add(i64 exponent, const Integer& value) {
    if (exponent < 0 || static_cast<std::size_t>(exponent) >= c_.size()) return;
    c_[static_cast<std::size_t>(exponent)] += value;
  }
  void add(i64 exponent, i64 value) { add(exponent, Integer(static_cast<long>(value))); }

  std::vector<Integer>& coeffs() { return c_; }

 private:
  std::vector<Integer> c_;
};

EtaPowerExpansion make(int d, std::size_t n, std::vector<Integer> c) {
  return EtaPowerExpansion{d, n, std::move(c)};
}

// sum over x in [lo, hi] of weight(x) q^{exponent(x)}, as a series of order n.
template <class Exp, class Weight>
RationalSeries single_sum(std::size_t n, i64 lo, i64 hi, Exp exponent, Weight weight) {
  Accumulator acc(n);
  for (i64 x = lo; x <= hi; ++x) acc.add(exponent(x), weight(x));
  return RationalSeries::from_integers(acc.coeffs());
}

i64 cube(i64 x) { return x * x * x; }

std::vector<Integer> divide_exact(const RationalSeries& s, long divisor, int d) {
  std::vector<Integer> out(s.order() + 1);
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (s[k].get_den() != 1)
      throw InexactDivision("(q;q)^" + std::to_string(d) + ": non-integer intermediate at q^" + std::to_string(k));
    const Integer& v = s[k].get_num();
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(divisor)))
      throw InexactDivision("(q;q)^" + std::to_string(d) + ": coefficient of q^" + std::to_string(k) +
                            " not divisible by " + std::to_string(divisor));
    mpz_divexact_ui(out[k].get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(divisor));
  }
  return out;
}

}  // namespace

bool is_supported(int d) noexcept {
  return std::find(kSupportedD.begin(), kSupportedD.end(), d) != kSupportedD.end();
}

EtaPowerExpansion expand_eta_1(std::size_t n, int extra_margin) {
  Accumulator acc(n);
  const i64 w = window(n, 2.0 / 3.0, extra_margin);
  for (i64 i = -w; i <= w; ++i) acc.add(i * (3 * i + 1) / 2, sign(i));
  return make(1, n, std::move(acc.coeffs()));
}

EtaPowerExpansion expand_eta_3(std::size_t n, int extra_margin) {
  Accumulator acc(n);
  const i64 w = window(n, 2.0, extra_margin);
  for (i64 j = 0; j <= w; ++j) acc.add(j * (j + 1) / 2, sign(j) * (2 * j + 1));
  return make(3, n, std::move(acc.coeffs()));
}

EtaPowerExpansion expand_eta_4(std::size_t n, int extra_margin) {
  Accumulator acc(n);
  const i64 wi = window(n, 2.0 / 3.0, extra_margin);
  const i64 wj = window(n, 2.0, extra_margin);
  for (i64 i = -wi; i <= wi; ++i)
    for (i64 j = 0; j <= wj; ++j) acc.add(i * (3 * i + 1) / 2 + j * (j + 1) / 2, sign(i + j) * (2 * j + 1));
  return make(4, n, std::move(acc.coeffs()));
}

EtaPowerExpansion expand_eta_6(std::size_t n, int extra_margin) {
  Accumulator acc(n);
  const i64 w = window(n, 2.0, extra_margin);
  for (i64 i = 0; i <= w; ++i)
    for (i64 j = 0; j <= w; ++j)
      acc.add(i * (i + 1) / 2 + j * (j + 1) / 2, sign(i + j) * (2 * i + 1) * (2 * j + 1));
  return make(6, n, std::move(acc.coeffs()));
}

EtaPowerExpansion expand_eta_8(std::size_t n, int extra_margin) {
  const i64 wm = window(n, 1.0 / 3.0, extra_margin);
  const i64 wn = window(n, 1.0, extra_margin);
  // sum_m (3m+1)^3 q^{3m^2+2m}
  const auto a = single_sum(n, -wm, wm, [](i64 m) { return 3 * m * m + 2 * m; }, [](i64 m) { return cube(3 * m + 1); });
  // sum_n q^{n^2}
  const auto theta = single_sum(n, -wn, wn, [](i64 k) { return k * k; }, [](i64) { return i64{1}; });
  // sum_m (6m+1)^3 q^{3m^2+m}
  const auto c = single_sum(n, -wm, wm, [](i64 m) { return 3 * m * m + m; }, [](i64 m) { return cube(6 * m + 1); });
  // sum_{n>=0} q^{n^2+n}
  const auto psi = single_sum(n, 0, wn, [](i64 k) { return k * k + k; }, [](i64) { return i64{1}; });

  const auto combined = series_mul(a, theta) * Rational(4) - series_mul(c, psi);
  return make(8, n, divide_exact(combined, 3, 8));
}

EtaPowerExpansion expand_eta_10(std::size_t n, int extra_margin) {
  const i64 w = window(n, 1.0 / 3.0, extra_margin);
  auto e1 = [](i64 m) { return 3 * m * m + 2 * m; };
  auto e2 = [](i64 k) { return 3 * k * k + k; };
  const auto a = single_sum(n, -w, w, e1, [](i64 m) { return cube(3 * m + 1); });
  const auto e = single_sum(n, -w, w, e2, [](i64 k) { return 6 * k + 1; });
  const auto f = single_sum(n, -w, w, e1, [](i64 m) { return 3 * m + 1; });
  const auto g = single_sum(n, -w, w, e2, [](i64 k) { return cube(6 * k + 1); });

  const auto combined = series_mul(a, e) * Rational(4) - series_mul(f, g);
  return make(10, n, divide_exact(combined, 3, 10));
}

EtaPowerExpansion expand_eta_14(std::size_t n, int extra_margin) {
  Accumulator acc(n);
  const i64 wm = window(n, 1.0 / 3.0, extra_margin);
  const i64 wn = window(n, 1.0 / 4.0, extra_margin);
  for (i64 m = -wm; m <= wm; ++m) {
    for (i64 k = -wn; k <= wn; ++k) {
      const i64 num = 4 * (3 * m + 1) * (3 * m + 1) + 3 * (4 * k + 1) * (4 * k + 1) - 7;
      if (num % 12 != 0)
        throw NonIntegerExponent("(q;q)^14 lattice point (" + std::to_string(m) + ", " + std::to_string(k) +
                                 ") has non-integral exponent");
      const i64 exponent = num / 12;
      if (exponent > static_cast<i64>(n)) continue;
      Integer w = sign(m) * (3 * m + 1);
      w *= static_cast<long>(4 * k + 1);
      w *= static_cast<long>(6 * m + 4 * k + 3);
      w *= static_cast<long>(6 * m - 4 * k + 1);
      w *= static_cast<long>(6 * m + 12 * k + 5);
      w *= static_cast<long>(6 * m - 12 * k - 1);
      acc.add(exponent, Integer(-w));
    }
  }
  return make(14, n, divide_exact(RationalSeries::from_integers(acc.coeffs()), 15, 14));
}

Rational f_poly(const Rational& m, const Rational& n) {
  static constexpr std::array<long, 7> binom12even{1, 66, 495, 924, 495, 66, 1};  // C(12, 2j)
  Rational total = 0;
  for (int j = 0; j <= 6; ++j) {
    Rational term = binom12even[j] * ((j % 2 == 0) ? 1 : -1);
    for (int t = 0; t < j; ++t) term *= m;
    for (int t = 0; t < 6 - j; ++t) term *= n;
    total += term;
  }
  return total;
}

EtaPowerExpansion expand_eta_26(std::size_t n, int extra_margin) {
  // Shifted exponents start at -1; the q^{-1} terms of the two sums cancel.
  std::vector<Rational> acc(n + 2);
  auto add = [&](i64 numerator, i64 denom, const Rational& value, i64 i, i64 j) {
    if (numerator % denom != 0)
      throw NonIntegerExponent("(q;q)^26 lattice point (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") has non-integral shifted exponent");
    const i64 e = numerator / denom;
    if (e < -1)
      throw NonIntegerExponent("(q;q)^26 lattice point (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") has shifted exponent below -1");
    if (e <= static_cast<i64>(n)) acc[static_cast<std::size_t>(e + 1)] += value;
  };

  // ((6i+1)^2 + (6j+1)^2)/24 - 13/12, weight (-1)^{i+j} f((6i+1)^2/2, (6j+1)^2/2)
  const i64 w1 = window(n, 2.0 / 3.0, extra_margin);
  for (i64 i = -w1; i <= w1; ++i) {
    const i64 x = (6 * i + 1) * (6 * i + 1);
    for (i64 j = -w1; j <= w1; ++j) {
      const i64 y = (6 * j + 1) * (6 * j + 1);
      const i64 num = x + y - 26;
      if (num > 24 * static_cast<i64>(n)) continue;
      add(num, 24, sign(i + j) * f_poly(Rational(x, 2), Rational(y, 2)), i, j);
    }
  }

  // i^2 + (6j+1)^2/12 - 13/12, weight (-1)^{i+j} f(12 i^2, (6j+1)^2)
  const i64 wi = window(n, 1.0, extra_margin);
  const i64 wj = window(n, 1.0 / 3.0, extra_margin);
  for (i64 i = -wi; i <= wi; ++i) {
    for (i64 j = -wj; j <= wj; ++j) {
      const i64 y = (6 * j + 1) * (6 * j + 1);
      const i64 num = 12 * i * i + y - 13;
      if (num > 12 * static_cast<i64>(n)) continue;
      add(num, 12, sign(i + j) * f_poly(Rational(12 * i * i), Rational(y)), i, j);
    }
  }

  if (sgn(acc.front()) != 0)
    throw InexactDivision("(q;q)^26: q^-1 terms do not cancel (" + to_string(acc.front()) + ")");
  acc.erase(acc.begin());
  return make(26, n, divide_exact(RationalSeries(std::move(acc)), kEta26Divisor, 26));
}

EtaPowerExpansion expand_eta(int d, std::size_t n, int extra_margin) {
  switch (d) {
    case 1: return expand_eta_1(n, extra_margin);
    case 3: return expand_eta_3(n, extra_margin);
    case 4: return expand_eta_4(n, extra_margin);
    case 6: return expand_eta_6(n, extra_margin);
    case 8: return expand_eta_8(n, extra_margin);
    case 10: return expand_eta_10(n, extra_margin);
    case 14: return expand_eta_14(n, extra_margin);
    case 26: return expand_eta_26(n, extra_margin);
    default: throw UnsupportedD("no lattice-sum expansion for (q;q)^" + std::to_string(d));
  }
}

VerificationReport verify_identity(int d, std::size_t n) {
  VerificationReport report;
  report.check = "identity d=" + std::to_string(d);
  const auto lhs = expand_eta(d, n);
  const auto rhs = series_pow_int(euler_product(n), d);
  for (std::size_t k = 0; k <= n; ++k) {
    ++report.checked;
    if (rhs[k] != Rational(lhs.coeffs[k])) {
      report.first_failure = k;
      report.detail = "first mismatch at q^" + std::to_string(k) + ": lattice sum " + to_string(lhs.coeffs[k]) +
                      ", product " + to_string(rhs[k]);
      return report;
    }
  }
  report.passed = true;
  report.detail = "all " + std::to_string(n + 1) + " coefficients equal";
  return report;
}

}  // namespace etaq::identities
