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

#ifndef ETAQ_QSERIES_HPP
#define ETAQ_QSERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "etaq/errors.hpp"
#include "etaq/rational.hpp"

namespace etaq {

/// Truncated power series sum_{n=0}^{order} c_n q^n with exact rational
/// coefficients. Storage is dense; coeffs().size() == order() + 1 always.
///
/// Binary operations on series of different orders truncate to the smaller
/// order, so no coefficient is ever reported beyond computed precision.
class RationalSeries {
 public:
  /// The zero series of the given order.
  explicit RationalSeries(std::size_t order = 0);
  explicit RationalSeries(std::vector<Rational> coeffs);
  RationalSeries(std::initializer_list<Rational> coeffs);

  /// The constant series 1 truncated at `order`.
  static RationalSeries one(std::size_t order);

  /// Builds a series from integer coefficients; the order is ints.size() - 1.
  static RationalSeries from_integers(std::span<const Integer> ints);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Copy truncated at min(order(), new_order).
  RationalSeries truncated(std::size_t new_order) const;

  /// q^s * f, keeping the order of f (the top s coefficients fall off).
  RationalSeries shifted(std::size_t s) const;

  /// f(q^t): coefficient t*n of the result is f[n]; the order is kept.
  RationalSeries dilated(std::size_t t) const;

  bool all_integer() const;

  /// Numerators, valid when all_integer() holds.
  std::vector<Integer> integer_coeffs() const;

  RationalSeries& operator+=(const RationalSeries& g);
  RationalSeries& operator-=(const RationalSeries& g);
  RationalSeries& operator*=(const Rational& s);

  friend RationalSeries operator+(RationalSeries f, const RationalSeries& g) { return f += g; }
  friend RationalSeries operator-(RationalSeries f, const RationalSeries& g) { return f -= g; }
  friend RationalSeries operator*(RationalSeries f, const Rational& s) { return f *= s; }
  friend RationalSeries operator*(const RationalSeries& f, const RationalSeries& g);

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at min(f.order(), g.order()).
RationalSeries series_mul(const RationalSeries& f, const RationalSeries& g);

/// Multiplicative inverse to f.order(). Throws ZeroConstantTerm if f[0] == 0.
RationalSeries series_invert(const RationalSeries& f);

/// f^e by repeated squaring; negative e inverts first.
RationalSeries series_pow_int(const RationalSeries& f, std::int64_t e);

/// (q;q)_inf = prod_{m>=1} (1 - q^m) to order n, expanded factor by factor.
RationalSeries euler_product(std::size_t n);

/// Generalised binomial coefficient c_k(n) = prod_{i<n} (a - i b) / (b^n n!),
/// so that (1 - x)^k = sum_n (-1)^n c_k(n) x^n.
Rational binom_coeff_c(const FracExponent& k, std::size_t n);

/// c_k(0), ..., c_k(n) from the incremental recurrence
/// c(j) = c(j-1) (a - (j-1) b) / (b j), reduced at every step.
std::vector<Rational> binom_coeffs_c(const FracExponent& k, std::size_t n);

/// (q;q)_inf^k to order n for rational k, i.e. the coefficients p_k(0..n).
/// Computed as prod_{m=1}^{n} (1 - q^m)^k, each factor expanded through the
/// generalised binomial series.
RationalSeries eta_pow_fractional(const FracExponent& k, std::size_t n);

}  // namespace etaq

#endif  // ETAQ_QSERIES_HPP
