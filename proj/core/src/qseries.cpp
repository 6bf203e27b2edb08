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

#include "etaq/qseries.hpp"

#include <algorithm>
#include <utility>

namespace etaq {

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("a series needs at least one coefficient");
}

RationalSeries::RationalSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  if (coeffs_.empty()) throw InvalidArgument("a series needs at least one coefficient");
}

RationalSeries RationalSeries::one(std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

RationalSeries RationalSeries::from_integers(std::span<const Integer> ints) {
  std::vector<Rational> c(ints.begin(), ints.end());
  return RationalSeries(std::move(c));
}

RationalSeries RationalSeries::truncated(std::size_t new_order) const {
  if (new_order >= order()) return *this;
  return RationalSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

RationalSeries RationalSeries::shifted(std::size_t s) const {
  RationalSeries r(order());
  for (std::size_t n = s; n <= order(); ++n) r.coeffs_[n] = coeffs_[n - s];
  return r;
}

RationalSeries RationalSeries::dilated(std::size_t t) const {
  if (t == 0) throw InvalidArgument("dilation factor must be positive");
  RationalSeries r(order());
  for (std::size_t n = 0; n * t <= order(); ++n) r.coeffs_[n * t] = coeffs_[n];
  return r;
}

bool RationalSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::vector<Integer> RationalSeries::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw InexactDivision("series has a non-integer coefficient " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& g) {
  coeffs_.resize(std::min(coeffs_.size(), g.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += g.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& g) {
  coeffs_.resize(std::min(coeffs_.size(), g.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= g.coeffs_[n];
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalSeries operator*(const RationalSeries& f, const RationalSeries& g) { return series_mul(f, g); }

namespace {

// Clears denominators: returns D = lcm of den(f[0..n]) and the integers f[i]*D.
std::pair<Integer, std::vector<Integer>> scale_to_integers(const RationalSeries& f, std::size_t n) {
  Integer d = 1;
  for (std::size_t i = 0; i <= n; ++i)
    if (f[i].get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), f[i].get_den_mpz_t());
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(f[i]) == 0) continue;
    if (d == 1) {
      out[i] = f[i].get_num();
    } else {
      mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), f[i].get_den_mpz_t());
      out[i] *= f[i].get_num();
    }
  }
  return {std::move(d), std::move(out)};
}

std::vector<std::size_t> support(const std::vector<Integer>& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) idx.push_back(i);
  return idx;
}

}  // namespace

RationalSeries series_mul(const RationalSeries& f, const RationalSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  // Convolve over a common denominator so the inner loop is integer
  // multiply-add only; every coefficient is reduced once at the end.
  auto [df, fi] = scale_to_integers(f, n);
  auto [dg, gi] = scale_to_integers(g, n);
  const auto fs = support(fi);
  const auto gs = support(gi);

  std::vector<Integer> h(n + 1);
  for (std::size_t i : fs) {
    mpz_srcptr fv = fi[i].get_mpz_t();
    for (std::size_t j : gs) {
      if (i + j > n) break;
      mpz_addmul(h[i + j].get_mpz_t(), fv, gi[j].get_mpz_t());
    }
  }

  const Integer den = df * dg;
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (den == 1) {
      out[k] = Rational(h[k]);
    } else {
      out[k] = Rational(h[k], den);
      out[k].canonicalize();
    }
  }
  return RationalSeries(std::move(out));
}

RationalSeries series_invert(const RationalSeries& f) {
  if (sgn(f[0]) == 0) throw ZeroConstantTerm("cannot invert a series with zero constant term");
  const std::size_t n = f.order();

  // Unit integer constant term keeps the whole inverse integral.
  if (f.all_integer() && (f[0] == 1 || f[0] == -1)) {
    const auto fi = f.integer_coeffs();
    const auto fs = support(fi);
    const bool neg = f[0] == -1;
    std::vector<Integer> g(n + 1);
    g[0] = fi[0];
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) {
      acc = 0;
      for (std::size_t i : fs) {
        if (i == 0) continue;
        if (i > k) break;
        mpz_addmul(acc.get_mpz_t(), fi[i].get_mpz_t(), g[k - i].get_mpz_t());
      }
      // g[k] = -acc / f0 with f0 = +-1.
      g[k] = neg ? acc : Integer(-acc);
    }
    return RationalSeries::from_integers(g);
  }

  const Rational inv0 = 1 / f[0];
  std::vector<Rational> g(n + 1);
  g[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (sgn(f[i]) != 0) acc += f[i] * g[k - i];
    g[k] = -acc * inv0;
  }
  return RationalSeries(std::move(g));
}

RationalSeries series_pow_int(const RationalSeries& f, std::int64_t e) {
  if (e == 0) return RationalSeries::one(f.order());
  RationalSeries base = e < 0 ? series_invert(f) : f;
  std::uint64_t m = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  RationalSeries result = RationalSeries::one(f.order());
  bool have = false;
  while (m != 0) {
    if (m & 1) {
      result = have ? series_mul(result, base) : base;
      have = true;
    }
    m >>= 1;
    if (m != 0) base = series_mul(base, base);
  }
  return result;
}

RationalSeries euler_product(std::size_t n) {
  std::vector<Integer> c(n + 1);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = n; k >= m; --k) {
      if (sgn(c[k - m]) != 0) c[k] -= c[k - m];
      if (k == m) break;
    }
  return RationalSeries::from_integers(c);
}

Rational binom_coeff_c(const FracExponent& k, std::size_t n) { return binom_coeffs_c(k, n).back(); }

std::vector<Rational> binom_coeffs_c(const FracExponent& k, std::size_t n) {
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  const Integer a(static_cast<long>(k.num()));
  const Integer b(static_cast<long>(k.den()));
  Rational step;
  for (std::size_t j = 1; j <= n; ++j) {
    // c(j) = c(j-1) * (a - (j-1) b) / (b j)
    step.get_num() = a - b * static_cast<unsigned long>(j - 1);
    step.get_den() = b * static_cast<unsigned long>(j);
    step.canonicalize();
    c[j] = c[j - 1] * step;
  }
  return c;
}

RationalSeries eta_pow_fractional(const FracExponent& k, std::size_t n) {
  const auto c = binom_coeffs_c(k, n);
  // (1 - q^m)^k = sum_j (-1)^j c(j) q^{mj}
  std::vector<Rational> e(c);
  for (std::size_t j = 1; j < e.size(); j += 2) e[j] = -e[j];

  std::vector<Rational> r(n + 1);
  r[0] = 1;
  Rational acc, term;
  for (std::size_t m = 1; m <= n; ++m) {
    // In-place multiplication by the m-th factor, top index first so the
    // lower entries read below are still those of the previous product.
    for (std::size_t idx = n; idx >= m; --idx) {
      acc = r[idx];
      for (std::size_t j = 1; j * m <= idx; ++j) {
        const Rational& lo = r[idx - j * m];
        if (sgn(lo) == 0 || sgn(e[j]) == 0) continue;
        mpq_mul(term.get_mpq_t(), e[j].get_mpq_t(), lo.get_mpq_t());
        acc += term;
      }
      r[idx] = acc;
      if (idx == m) break;
    }
  }
  return RationalSeries(std::move(r));
}

}  // namespace etaq
