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

#include <numeric>
#include <random>
#include <set>

#include "etaq/congruence.hpp"
#include "etaq/errors.hpp"
#include "etaq/qseries.hpp"
#include "oracles.hpp"

namespace etaq::congruence {
namespace {

using arith::PrimePower;

std::set<std::uint64_t> residues_for(const std::vector<Congruence>& list, std::uint64_t l) {
  std::set<std::uint64_t> out;
  for (const auto& c : list)
    if (c.modulus.prime() == l) out.insert(c.residue);
  return out;
}

const Congruence* find(const std::vector<Congruence>& list, std::uint64_t l, std::uint64_t r) {
  for (const auto& c : list)
    if (c.modulus.prime() == l && c.residue == r) return &c;
  return nullptr;
}

// ------------------------------------------------------ make_congruence

TEST(MakeCongruence, Validation) {
  EXPECT_THROW(make_congruence(FracExponent(-1, 2), PrimePower(2), 1), PrimeDividesDenominator);
  EXPECT_THROW(make_congruence(FracExponent(-1, 2), PrimePower(7, 2), 14, 3), InvalidArgument);
  EXPECT_THROW(make_congruence(FracExponent(-1, 2), PrimePower(7), 7), InvalidArgument);
  const auto c = make_congruence(FracExponent(-1, 2), PrimePower(7, 2), 49, 20);
  EXPECT_EQ(c.statement(), "p_{-1/2}(49n+20) = 0 mod 49");
  EXPECT_FALSE(c.verified_to.has_value());
}

// ---------------------------------------------------- theorem2_condition

TEST(Theorem2Condition, Examples) {
  EXPECT_TRUE(theorem2_condition(4, 5, 4));
  EXPECT_TRUE(theorem2_condition(3, 7, 2));
  EXPECT_FALSE(theorem2_condition(1, 5, 1));
  EXPECT_THROW(theorem2_condition(2, 5, 1), UnsupportedD);
}

TEST(Theorem2Condition, CaseStructure) {
  EXPECT_EQ(criterion_case(1), 1);
  EXPECT_EQ(criterion_case(3), 2);
  EXPECT_EQ(criterion_case(8), 3);
  EXPECT_EQ(criterion_case(10), 4);
  EXPECT_EQ(criterion_case(26), 5);
  // case 2 admits 8r+1 = 0 mod l
  EXPECT_TRUE(theorem2_condition(3, 7, 6));  // 49 = 0 mod 7
  // case 4 needs l = 3 mod 4
  EXPECT_FALSE(theorem2_condition(6, 17, 4));  // 24*4+6 = 102 = 6*17, but 17 = 1 mod 4
  EXPECT_TRUE(theorem2_condition(6, 7, 5));
  // case 5 needs l = 11 mod 12
  EXPECT_TRUE(theorem2_condition(26, 107, 97));
  EXPECT_TRUE(theorem2_condition(26, 59, 53));  // 24*53+26 = 22*59; the residue condition alone holds
  // nothing is a non-residue mod 2
  EXPECT_FALSE(theorem2_condition(1, 2, 0));
  EXPECT_FALSE(theorem2_condition(1, 2, 1));
}

TEST(Theorem2Condition, Case1MatchesNaiveLegendre) {
  for (std::uint64_t l : {5u, 7u, 11u, 13u, 17u, 19u})
    for (std::uint64_t r = 0; r < l; ++r)
      EXPECT_EQ(theorem2_condition(1, l, r), oracle::legendre_naive(static_cast<long>(24 * r + 1),
                                                                    static_cast<long>(l)) == -1);
}

// --------------------------------------------------- theorem2_congruences

TEST(Theorem2Congruences, MinusOneHalf) {
  const auto list = theorem2_congruences(1, 2, 20);
  EXPECT_EQ(residues_for(list, 7), (std::set<std::uint64_t>{2, 4, 5, 6}));
  const auto* c17 = find(list, 17, 11);
  ASSERT_NE(c17, nullptr);
  ASSERT_EQ(c17->provenance.size(), 1u);
  EXPECT_EQ(c17->provenance[0].d, 8);
  EXPECT_EQ(c17->provenance[0].criterion_case, 3);
  for (const auto& c : list) EXPECT_EQ(c.k, FracExponent(-1, 2));
}

TEST(Theorem2Congruences, RamanujanFromExponentMinusOne) {
  const auto list = theorem2_congruences(1, 1, 12);
  EXPECT_NE(find(list, 5, 4), nullptr);
  EXPECT_NE(find(list, 7, 5), nullptr);
  EXPECT_NE(find(list, 11, 6), nullptr);
  // 5n+4 arises from both d = 4 and d = 14 (1 + 4 = 5, 1 + 14 = 15); both provenances are kept.
  const auto* c5 = find(list, 5, 4);
  ASSERT_NE(c5, nullptr);
  EXPECT_EQ(c5->provenance.size(), 2u);
}

TEST(Theorem2Congruences, MinusTwoThirdsDoesNotReachNineteen) {
  // 19 divides no 2 + 3d for d in the supported set, so the criterion cannot
  // emit anything at l = 19; the mod-19 congruence is checked numerically.
  const auto list = theorem2_congruences(2, 3, 20);
  EXPECT_TRUE(residues_for(list, 19).empty());
  EXPECT_EQ(residues_for(list, 5), (std::set<std::uint64_t>{3, 4}));
  EXPECT_EQ(residues_for(list, 11), (std::set<std::uint64_t>{2, 4, 5, 7, 8, 9}));
  auto c = make_congruence(FracExponent(-2, 3), PrimePower(19), 9);
  EXPECT_TRUE(verify_congruence(c, 1000).passed);
}

TEST(Theorem2Congruences, SortedAndPrimesDivideNumerator) {
  const auto list = theorem2_congruences(3, 4, 120);
  for (std::size_t i = 1; i < list.size(); ++i)
    EXPECT_LT(std::pair(list[i - 1].modulus.prime(), list[i - 1].residue),
              std::pair(list[i].modulus.prime(), list[i].residue));
  for (const auto& c : list)
    for (const auto& p : c.provenance) EXPECT_EQ((3 + p.d * 4) % static_cast<long>(c.modulus.prime()), 0);
}

TEST(Theorem2Congruences, EveryEmittedClaimHoldsNumerically) {
  std::vector<Congruence> all;
  for (std::int64_t b = 1; b <= 5; ++b)
    for (std::int64_t a = -b + 1; a < b; ++a) {
      if (a == 0 || std::gcd(a, b) != 1) continue;
      auto list = theorem2_congruences(a, b, 60);
      all.insert(all.end(), list.begin(), list.end());
    }
  ASSERT_FALSE(all.empty());
  const auto reports = verify_all(all, 400);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_TRUE(reports[i].passed) << all[i].statement() << ": " << reports[i].detail;
}

// ------------------------------------------------------ residue_series_pk

TEST(ResidueSeries, SeventeenNPlusEleven) {
  const auto s = residue_series_pk(FracExponent(-1, 2), PrimePower(17), 45);
  EXPECT_EQ(s[11], 0u);
  EXPECT_EQ(s[28], 0u);
  EXPECT_EQ(s[45], 0u);
}

TEST(ResidueSeries, RamanujanModFive) {
  const auto s = residue_series_pk(FracExponent(-1), PrimePower(5), 9);
  EXPECT_EQ(s[4], 0u);
  EXPECT_EQ(s[9], 0u);
}

TEST(ResidueSeries, OneFifthModFortyNine) {
  const auto s = residue_series_pk(FracExponent(1, 5), PrimePower(7, 2), 20);
  EXPECT_EQ(s[6], 0u);
  EXPECT_EQ(s[13], 0u);
  EXPECT_EQ(s[20], 0u);
}

TEST(ResidueSeries, ReductionConsistency) {
  const auto exact = eta_pow_fractional(FracExponent(-1, 2), 60);
  const auto s = residue_series_pk(FracExponent(-1, 2), PrimePower(7, 2), 60);
  ASSERT_EQ(s.order(), 60u);
  for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(s[n], oracle::reduce_naive(exact[n], 49)) << n;
}

TEST(ResidueSeries, RandomAgreementWithExactSeries) {
  std::mt19937_64 rng(2026);
  const std::vector<std::pair<std::uint64_t, unsigned>> moduli = {{5, 1}, {5, 3}, {7, 2}, {11, 1}, {13, 2},
                                                                  {17, 2}, {3, 4}, {2, 5}, {31, 1}};
  int done = 0;
  while (done < 25) {
    const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
    const std::int64_t a = std::uniform_int_distribution<std::int64_t>(-12, 12)(rng);
    const auto [l, s] = moduli[std::uniform_int_distribution<std::size_t>(0, moduli.size() - 1)(rng)];
    if (b % static_cast<std::int64_t>(l) == 0) continue;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    const FracExponent k(a, b);
    const PrimePower m(l, s);
    const auto exact = eta_pow_fractional(k, n);
    const auto res = residue_series_pk(k, m, n);
    for (std::size_t i = 0; i <= n; ++i)
      ASSERT_EQ(res[i], arith::reduce_mod(exact[i], m.modulus())) << k.to_string() << " mod " << m.modulus();
    ++done;
  }
}

TEST(ResidueSeries, ExponentAdditivityModM) {
  const PrimePower m(7, 3);
  const std::vector<std::pair<FracExponent, FracExponent>> pairs = {
      {FracExponent(-1, 2), FracExponent(-1, 2)}, {FracExponent(1, 3), FracExponent(-5, 6)},
      {FracExponent(2, 5), FracExponent(3, 5)}};
  for (const auto& [k1, k2] : pairs) {
    const auto lhs = residue_series_pk(k1 + k2, m, 300);
    const auto rhs = residue_mul(residue_series_pk(k1, m, 300), residue_series_pk(k2, m, 300));
    EXPECT_EQ(lhs.coeffs, rhs.coeffs);
  }
}

TEST(ResidueSeries, LargeModulusPath) {
  // Moduli above 2^32 take the 128-bit accumulation path.
  const PrimePower m(7, 20);
  const auto exact = eta_pow_fractional(FracExponent(-3, 4), 80);
  const auto res = residue_series_pk(FracExponent(-3, 4), m, 80);
  for (std::size_t i = 0; i <= 80; ++i) EXPECT_EQ(res[i], arith::reduce_mod(exact[i], m.modulus()));
}

TEST(ResidueSeries, PrimeDividingDenominatorThrows) {
  EXPECT_THROW(residue_series_pk(FracExponent(-1, 6), PrimePower(3), 10), PrimeDividesDenominator);
}

// ------------------------------------------------------ verify_congruence

TEST(Verify, MinusTwoThirdsModNineteen) {
  auto c = make_congruence(FracExponent(-2, 3), PrimePower(19), 9);
  const auto r = verify_congruence(c, 1000);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.checked, 53u);  // 19n + 9 <= 1000 for n = 0..52
  ASSERT_TRUE(c.verified_to.has_value());
  EXPECT_EQ(*c.verified_to, 1000u);
}

TEST(Verify, MinusOneHalfModFortyNine) {
  for (std::uint64_t r : {20u, 34u, 41u, 48u}) {
    auto c = make_congruence(FracExponent(-1, 2), PrimePower(7, 2), 49, r);
    EXPECT_TRUE(verify_congruence(c, 1000).passed) << r;
  }
}

TEST(Verify, WrongResidueGivesCounterexample) {
  auto c = make_congruence(FracExponent(-1, 2), PrimePower(17), 10);
  const auto r = verify_congruence(c, 200);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.first_failure.has_value());
  const auto exact = eta_pow_fractional(FracExponent(-1, 2), 200);
  EXPECT_NE(oracle::reduce_naive(exact[*r.first_failure], 17), 0u);
  EXPECT_EQ(*r.first_failure % 17, 10u);
  EXPECT_FALSE(c.verified_to.has_value());
}

TEST(Verify, VerifyAllKeepsInputOrderAndMatchesSequential) {
  std::vector<Congruence> claims;
  for (std::uint64_t r = 0; r < 7; ++r) claims.push_back(make_congruence(FracExponent(-1, 2), PrimePower(7), r));
  claims.push_back(make_congruence(FracExponent(-1, 3), PrimePower(5, 2), 5, 3));
  claims.push_back(make_congruence(FracExponent(-1), PrimePower(11), 6));
  auto copy = claims;
  const auto parallel = verify_all(claims, 600, 4);
  for (std::size_t i = 0; i < copy.size(); ++i) {
    const auto seq = verify_congruence(copy[i], 600);
    EXPECT_EQ(parallel[i].passed, seq.passed) << i;
    EXPECT_EQ(parallel[i].checked, seq.checked) << i;
    EXPECT_EQ(parallel[i].first_failure, seq.first_failure) << i;
    EXPECT_EQ(parallel[i].detail, seq.detail) << i;
  }
  EXPECT_EQ(verify_all(claims, 600, 1).size(), claims.size());
}

// ------------------------------------------------------------- discover

TEST(Discover, MinusOneHalfModFortyNine) {
  const auto found = discover(FracExponent(-1, 2), 7, 7, 2, 5000);
  std::set<std::uint64_t> r49;
  for (const auto& c : found) {
    ASSERT_EQ(c.provenance.size(), 1u);
    EXPECT_EQ(c.provenance[0].kind, Provenance::Kind::kDiscovered);
    EXPECT_EQ(c.provenance[0].label, kDiscoveryLabel);
    EXPECT_GE(c.provenance[0].samples, kMinWitnesses);
    if (c.modulus.modulus() == 49 && c.progression_modulus == 49) r49.insert(c.residue);
  }
  EXPECT_EQ(r49, (std::set<std::uint64_t>{20, 34, 41, 48}));
}

TEST(Discover, MinusOneThirdModTwentyFive) {
  const auto found = discover(FracExponent(-1, 3), 5, 5, 2, 3000);
  bool seen = false;
  for (const auto& c : found)
    seen = seen || (c.modulus.modulus() == 25 && c.progression_modulus == 5 && c.residue == 3);
  EXPECT_TRUE(seen);
}

TEST(Discover, MinusOneHalfModTwoEightyNine) {
  const auto found = discover(FracExponent(-1, 2), 17, 17, 2, 6000);
  bool seen = false;
  for (const auto& c : found)
    seen = seen || (c.modulus.modulus() == 289 && c.progression_modulus == 289 && c.residue == 283);
  EXPECT_TRUE(seen);
}

TEST(Discover, IsConservative) {
  const std::size_t n = 1500;
  auto found = discover(FracExponent(-2, 5), 3, 13, 1, n);
  ASSERT_FALSE(found.empty());
  for (auto& c : found) EXPECT_TRUE(verify_congruence(c, n).passed) << c.statement();
}

TEST(Discover, SkipsPrimesDividingDenominator) {
  const auto found = discover(FracExponent(-1, 2), 2, 7, 1, 200);
  for (const auto& c : found) EXPECT_NE(c.modulus.prime(), 2u);
}

TEST(Discover, InsufficientSamples) {
  EXPECT_THROW(discover(FracExponent(-1, 2), 17, 17, 2, 1000), InsufficientSamples);
}

// ---------------------------------------------------------- frobenius lemma

TEST(Frobenius, Examples) {
  EXPECT_TRUE(frobenius_lemma_check(FracExponent(1, 2), 7, 1, 1, 300).passed);
  EXPECT_TRUE(frobenius_lemma_check(FracExponent(1, 5), 7, 2, 1, 300).passed);
  EXPECT_TRUE(frobenius_lemma_check(FracExponent(1), 2, 1, 3, 100).passed);
  EXPECT_THROW(frobenius_lemma_check(FracExponent(1, 7), 7, 1, 1, 50), PrimeDividesDenominator);
}

// ---------------------------------------------------- denominator theorem

TEST(Denominators, MinusOneHalf) {
  const auto r = denominator_theorem_check(FracExponent(-1, 2), 10);
  EXPECT_TRUE(r.report.passed);
  const std::vector<Integer> expected = {1, 2, 8, 16, 128, 256, 1024, 2048, 32768, 65536, 262144};
  EXPECT_EQ(r.observed, expected);
  EXPECT_EQ(r.predicted, expected);
}

TEST(Denominators, OneThirdAndIntegerExponent) {
  EXPECT_TRUE(denominator_theorem_check(FracExponent(1, 3), 10).report.passed);
  const auto r = denominator_theorem_check(FracExponent(5), 50);
  EXPECT_TRUE(r.report.passed);
  for (const auto& d : r.observed) EXPECT_EQ(d, 1);
}

TEST(Denominators, MoreExponents) {
  for (auto [a, b] : {std::pair{-2L, 3L}, {3L, 4L}, {-2L, 5L}, {7L, 6L}, {-5L, 12L}})
    EXPECT_TRUE(denominator_theorem_check(FracExponent(a, b), 80).report.passed) << a << "/" << b;
}

// ------------------------------------------------------------ convolution

TEST(Convolution, PartitionIdentities) {
  const auto r = convolution_identity_check(50);
  EXPECT_TRUE(r.thirds.passed) << r.thirds.detail;
  EXPECT_TRUE(r.halves.passed) << r.halves.detail;
  EXPECT_TRUE(r.mod5.passed) << r.mod5.detail;
  EXPECT_TRUE(r.mod7.passed) << r.mod7.detail;
  EXPECT_TRUE(r.passed());
  const auto p = oracle::partition_numbers(5);
  EXPECT_EQ(p[4], 5);
  EXPECT_EQ(p[5], 7);
}

}  // namespace
}  // namespace etaq::congruence
