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

#include "etaq/modforms.hpp"

#include <future>
#include <numeric>

#include "etaq/arith.hpp"
#include "etaq/congruence.hpp"
#include "etaq/errors.hpp"

namespace etaq::modforms {

ModularForm operator*(const ModularForm& f, const ModularForm& g) {
  return {f.weight + g.weight, series_mul(f.expansion, g.expansion)};
}

ModularForm pow(const ModularForm& f, unsigned e) {
  return {f.weight * static_cast<int>(e), series_pow_int(f.expansion, e)};
}

ModularForm delta(std::size_t n) {
  if (n == 0) return {12, RationalSeries(0)};
  // q * (q;q)^24 needs the product only to order n - 1.
  const auto eta24 = series_pow_int(euler_product(n - 1), 24);
  RationalSeries out(n);
  for (std::size_t i = 0; i + 1 <= n; ++i) out[i + 1] = eta24[i];
  return {12, std::move(out)};
}

ModularForm e6(std::size_t n) {
  RationalSeries out(n);
  out[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) out[i] = Rational(-504 * arith::sigma5(i));
  return {6, std::move(out)};
}

std::vector<Integer> tau_values(std::size_t n) { return delta(n).expansion.integer_coeffs(); }

VerificationReport tau_congruence_checks(std::size_t n) {
  VerificationReport r;
  r.check = "tau congruences mod 7 and 49";
  const auto tau = tau_values(n);
  auto fail = [&](std::uint64_t idx, std::string why) {
    r.first_failure = idx;
    r.detail = std::move(why);
    return r;
  };

  for (std::size_t i = 1; i <= n; ++i) {
    ++r.checked;
    const Integer rhs = arith::sigma3(i) * static_cast<unsigned long>(i);
    if (mod_u64(tau[i] - rhs, 7) != 0) return fail(i, "tau(" + std::to_string(i) + ") != n sigma_3(n) mod 7");
  }
  for (std::size_t i = 1; 7 * i <= n; ++i) {
    ++r.checked;
    if (mod_u64(tau[7 * i] - 14 * tau[i], 49) != 0)
      return fail(7 * i, "tau(7*" + std::to_string(i) + ") != 14 tau(" + std::to_string(i) + ") mod 49");
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = i % 7;
    if (s != 0 && s != 3 && s != 5 && s != 6) continue;
    ++r.checked;
    if (mod_u64(tau[i], 7) != 0) return fail(i, "tau(" + std::to_string(i) + ") != 0 mod 7");
  }
  r.passed = true;
  r.detail = "all congruences hold to order " + std::to_string(n);
  return r;
}

ModularForm hecke_T(const ModularForm& f, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("Hecke operator index must be positive");
  if (f.weight < 1) throw InvalidArgument("Hecke operator needs a positive weight");
  const std::size_t order = f.order() / m;
  RationalSeries out(order);
  Integer dpow;
  for (std::size_t n = 0; n <= order; ++n) {
    const std::uint64_t g = std::gcd<std::uint64_t>(m, n);
    Rational acc = 0;
    for (std::uint64_t d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      const std::uint64_t idx = n * m / (d * d);
      if (sgn(f[idx]) == 0) continue;
      mpz_ui_pow_ui(dpow.get_mpz_t(), d, static_cast<unsigned long>(f.weight - 1));
      acc += Rational(dpow) * f[idx];
    }
    out[n] = acc;
  }
  return {f.weight, std::move(out)};
}

RationalSeries u_operator(const RationalSeries& f, std::uint64_t m) {
  if (m == 0) throw InvalidArgument("U operator index must be positive");
  const std::size_t order = f.order() / m;
  RationalSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) out[n] = f[n * m];
  return out;
}

std::array<ModularForm, 6> s72_basis(std::size_t n) {
  const auto d = delta(n);
  const auto e = e6(n);
  std::array<ModularForm, 7> dpow;  // dpow[j] = Delta^j
  dpow[1] = d;
  for (int j = 2; j <= 6; ++j) dpow[j] = dpow[j - 1] * d;
  const auto e2 = e * e;
  std::array<ModularForm, 6> epow;  // epow[i] = E6^{2i}
  epow[0] = {0, RationalSeries::one(n)};
  for (int i = 1; i <= 5; ++i) epow[i] = epow[i - 1] * e2;

  std::array<ModularForm, 6> basis;
  for (int i = 1; i <= 6; ++i) basis[i - 1] = dpow[7 - i] * epow[i - 1];
  return basis;
}

BasisDecomposition decompose_in_basis(const ModularForm& f, const std::array<ModularForm, 6>& basis) {
  if (f.weight != 72) throw InvalidArgument("decomposition needs a weight-72 form");
  if (f.order() < 6) throw InvalidArgument("decomposition needs the expansion through q^6");
  for (const auto& b : basis)
    if (b.order() < 6) throw InvalidArgument("basis expansions must reach q^6");

  BasisDecomposition out;
  // B_i starts with q^{7-i}, so the q^deg equation introduces a_{7-deg}.
  for (std::size_t deg = 1; deg <= 6; ++deg) {
    const std::size_t i = 7 - deg;  // 1-based basis index
    Rational rest = f[deg];
    for (std::size_t jj = i + 1; jj <= 6; ++jj) rest -= out.coefficients[jj - 1] * basis[jj - 1][deg];
    const Rational& lead = basis[i - 1][deg];
    if (sgn(lead) == 0) throw ReconstructionMismatch("basis element has a zero leading coefficient");
    out.coefficients[i - 1] = rest / lead;
  }

  std::size_t limit = f.order();
  for (const auto& b : basis) limit = std::min(limit, b.order());
  for (std::size_t n = 0; n <= limit; ++n) {
    Rational sum = 0;
    for (std::size_t i = 0; i < 6; ++i) sum += out.coefficients[i] * basis[i][n];
    if (sum != f[n])
      throw ReconstructionMismatch("reconstruction differs at q^" + std::to_string(n) + ": " + to_string(sum) +
                                   " vs " + to_string(f[n]));
  }
  out.residual_checked_to = limit;
  return out;
}

BasisDecomposition decompose_in_basis(const ModularForm& f) { return decompose_in_basis(f, s72_basis(f.order())); }

ProofReport modular_proof_289(std::size_t n_check, std::size_t image_order) {
  if (image_order < 6) throw InvalidArgument("image order must be at least 6");

  auto residue_leg = std::async(std::launch::async, [n_check] {
    auto c = congruence::make_congruence(FracExponent(-1, 2), arith::PrimePower(17, 2), 289, 283);
    return congruence::verify_congruence(c, n_check);
  });

  const std::size_t n = 289 * image_order;
  const auto d6 = pow(delta(n), 6);
  const auto image = hecke_T(hecke_T(d6, 17), 17);

  ProofReport report;
  report.decomposition = decompose_in_basis(image, s72_basis(image.order()));
  static constexpr std::array<unsigned, 6> expected{3, 2, 2, 2, 2, 2};
  report.valuations_ok = true;
  for (std::size_t i = 0; i < 6; ++i) {
    const Rational& a = report.decomposition.coefficients[i];
    if (a.get_den() != 1 || sgn(a) == 0) {
      report.valuations_ok = false;
      continue;
    }
    report.valuations[i] = arith::ord_p(a.get_num(), 17);
    if (report.valuations[i] != expected[i]) report.valuations_ok = false;
  }

  report.residue_check = residue_leg.get();
  report.agree = report.valuations_ok && report.residue_check.passed;
  return report;
}

}  // namespace etaq::modforms
