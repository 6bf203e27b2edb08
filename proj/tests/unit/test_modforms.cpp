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


#include <gtest/gtest.h>

#include "etaq/arith.hpp"
#include "etaq/errors.hpp"
#include "etaq/modforms.hpp"
#include "oracles.hpp"

namespace etaq::modforms {
namespace {

const char* const kA[6] = {
    "2803266424444011486961793663394426123943306806893849573592292186093616946565526483482308",
    "1113231602545024595543146596204782142754892610829246238990919796002850856740428953088",
    "473283426681023847957038578509799615924187574407462345196010436216861639045631744",
    "-15540741518888434902232917920473791139082293079249820503668479703217777938560",
    "-16044891546973524144213690827891708884411117984601259701301088310976672",
    "216026225099443878192110703691596145681836890232383902466304",
};

// tau(n) from the naive 24th power of the Euler product.
std::vector<Integer> tau_oracle(std::size_t n) {
  const auto e24 = oracle::power(oracle::euler_product_naive(n), 24);
  std::vector<Integer> t(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) t[i] = e24[i - 1];
  return t;
}

TEST(Delta, Coefficients) {
  const auto d = delta(20);
  EXPECT_EQ(d.weight, 12);
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], -24);
  EXPECT_EQ(d[7], -16744);
}

TEST(Delta, TauMatchesNaiveProduct) { EXPECT_EQ(tau_values(120), tau_oracle(120)); }

TEST(E6, Coefficients) {
  const auto e = e6(30);
  EXPECT_EQ(e.weight, 6);
  EXPECT_EQ(e[0], 1);
  EXPECT_EQ(e[1], -504);
  EXPECT_EQ(e[2], -16632);
  for (unsigned long n = 1; n <= 30; ++n) EXPECT_EQ(e[n], Rational(-504 * oracle::divisor_sum(n, 5)));
}

TEST(E6, CubeMinusSquareRelation) {
  // E4^3 - E6^2 = 1728 Delta, with E4 = 1 + 240 sum sigma_3(n) q^n built here.
  const std::size_t n = 40;
  std::vector<Rational> e4(n + 1);
  e4[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) e4[i] = Rational(240 * oracle::divisor_sum(i, 3));
  const ModularForm E4{4, RationalSeries(e4)};
  const auto lhs = pow(E4, 3).expansion - pow(e6(n), 2).expansion;
  EXPECT_EQ(lhs, delta(n).expansion * Rational(1728));
}

TEST(Tau, ChecksPass) {
  const auto r = tau_congruence_checks(700);
  EXPECT_TRUE(r.passed) << r.detail;
  const auto t = tau_values(14);
  EXPECT_EQ(t[7] % 7, 0);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(Integer(t[14] - 14 * t[2]) % 49, 0);
}

TEST(Tau, HeckeMultiplicativity) {
  const auto t = tau_values(50 * 13);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
    for (long n = 1; n <= 50; ++n) {
      Integer p11;
      mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
      const Integer rhs = t[p] * t[n] - (n % p == 0 ? p11 * t[n / p] : Integer(0));
      EXPECT_EQ(t[p * n], rhs) << p << " " << n;
    }
}

TEST(Hecke, Examples) {
  const auto d = delta(200);
  EXPECT_EQ(hecke_T(d, 2)[1], -24);
  EXPECT_EQ(hecke_T(d, 7)[1], -16744);
  EXPECT_EQ(hecke_T(d, 1).expansion, d.expansion);
  EXPECT_EQ(hecke_T(d, 7).order(), 200u / 7);
}

TEST(Hecke, DeltaIsAnEigenform) {
  const auto d = delta(400);
  const auto t = tau_values(13);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto tp = hecke_T(d, p);
    EXPECT_EQ(tp.weight, 12);
    EXPECT_EQ(tp.expansion, d.expansion.truncated(tp.order()) * Rational(t[p])) << p;
  }
}

TEST(Hecke, PreservesIntegrality) {
  const auto f = pow(delta(300), 2) * e6(300);
  const auto g = hecke_T(f, 5);
  EXPECT_EQ(g.weight, 30);
  EXPECT_TRUE(g.expansion.all_integer());
}

TEST(UOperator, Examples) {
  const auto d = delta(100);
  EXPECT_EQ(u_operator(d.expansion, 1), d.expansion);
  EXPECT_EQ(u_operator(d.expansion, 7)[1], -16744);
  EXPECT_EQ(u_operator(d.expansion, 7).order(), 14u);
}

TEST(UOperator, AgreesWithHeckeModSeventeenSquared) {
  const std::size_t n = 50 * 17;
  const auto d6 = pow(delta(n), 6);
  const auto t = hecke_T(d6, 17);
  const auto u = u_operator(d6.expansion, 17);
  ASSERT_EQ(t.order(), u.order());
  for (std::size_t i = 0; i <= t.order(); ++i) {
    const Integer diff = Integer(t[i].get_num() - u[i].get_num());
    EXPECT_EQ(diff % 289, 0) << i;
  }
}

TEST(Basis, Shape) {
  const auto basis = s72_basis(12);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(basis[i].weight, 72);
    EXPECT_EQ(basis[i][0], 0);
    const std::size_t lead = static_cast<std::size_t>(6 - i);  // B_{i+1} starts at q^{7-(i+1)}
    for (std::size_t j = 0; j < lead; ++j) EXPECT_EQ(basis[i][j], 0) << i << " " << j;
    EXPECT_EQ(basis[i][lead], 1);
  }
  EXPECT_EQ(basis[5][2], -5064);
}

TEST(Basis, DecomposeBasisElements) {
  const auto basis = s72_basis(30);
  for (int i = 0; i < 6; ++i) {
    const auto dec = decompose_in_basis(basis[i], basis);
    for (int j = 0; j < 6; ++j) EXPECT_EQ(dec.coefficients[j], i == j ? 1 : 0);
    EXPECT_EQ(dec.residual_checked_to, 30u);
  }
  const auto d6 = decompose_in_basis(pow(delta(30), 6), basis);
  EXPECT_EQ(d6.coefficients[0], 1);
}

TEST(Basis, RoundTrip) {
  const auto basis = s72_basis(40);
  const std::array<Rational, 6> coeffs = {Rational(3), Rational(-7, 2), Rational(0), Rational(11), Rational(1, 5),
                                          Rational(-2)};
  RationalSeries f(40);
  for (int i = 0; i < 6; ++i) f += basis[i].expansion * coeffs[i];
  const auto dec = decompose_in_basis(ModularForm{72, f}, basis);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(dec.coefficients[i], coeffs[i]);
}

TEST(Basis, NonCuspFormIsRejected) {
  auto bad = pow(delta(30), 6);
  bad.expansion[20] += 1;
  EXPECT_THROW(decompose_in_basis(bad), ReconstructionMismatch);
  auto e6_12 = pow(e6(30), 12);
  EXPECT_THROW(decompose_in_basis(e6_12), ReconstructionMismatch);
}

TEST(ModularProof, ReproducesCoefficientsAndValuations) {
  const auto proof = modular_proof_289(3000);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(to_string(proof.decomposition.coefficients[i]), kA[i]) << "a" << i + 1;
  EXPECT_EQ(proof.valuations, (std::array<unsigned, 6>{3, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(proof.valuations_ok);
  EXPECT_TRUE(proof.residue_check.passed) << proof.residue_check.detail;
  EXPECT_TRUE(proof.agree);
  for (int i = 0; i < 6; ++i)
    EXPECT_EQ(arith::ord_p(proof.decomposition.coefficients[i].get_num(), 17), i == 0 ? 3u : 2u);
}

}  // namespace
}  // namespace etaq::modforms
