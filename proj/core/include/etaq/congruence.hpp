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

#ifndef ETAQ_CONGRUENCE_HPP
#define ETAQ_CONGRUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaq/arith.hpp"
#include "etaq/rational.hpp"
#include "etaq/report.hpp"

namespace etaq::congruence {

/// Where a congruence claim came from.
struct Provenance {
  enum class Kind {
    kCriterion,   ///< produced by the lattice-sum criterion (theorem2_*)
    kPublished,   ///< a proved entry of the published catalogue
    kConjecture,  ///< a conjectured entry of the published catalogue
    kDiscovered,  ///< found by a numerical scan; never a proof
  };
  Kind kind = Kind::kDiscovered;
  int criterion_case = 0;  ///< 1..5 for kCriterion
  int d = 0;               ///< exponent of (q;q)^d used, when applicable
  std::string label;
  std::uint64_t samples = 0;  ///< witnesses checked, for kDiscovered

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

const char* to_string(Provenance::Kind kind);

/// The claim p_k(P n + r) = 0 (mod l^s) for all n >= 0, where the
/// progression modulus P is a power of l.
struct Congruence {
  FracExponent k;
  arith::PrimePower modulus{2};
  std::uint64_t progression_modulus = 2;
  std::uint64_t residue = 0;
  std::vector<Provenance> provenance;
  /// Largest coefficient index up to which the claim was checked.
  std::optional<std::uint64_t> verified_to;

  /// Human-readable statement, e.g. "p_{-1/2}(49n+20) = 0 mod 49".
  std::string statement() const;
};

/// Validates and builds a congruence. Throws PrimeDividesDenominator when
/// l | den(k), InvalidArgument when the progression modulus is not a power
/// of l or the residue is out of range.
Congruence make_congruence(const FracExponent& k, const arith::PrimePower& modulus,
                           std::uint64_t progression_modulus, std::uint64_t residue,
                           std::vector<Provenance> provenance = {});

/// Shorthand for progression modulus = l.
Congruence make_congruence(const FracExponent& k, const arith::PrimePower& modulus, std::uint64_t residue,
                           std::vector<Provenance> provenance = {});

/// Dense truncated series over Z/M.
struct ResidueSeries {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> coeffs;

  std::size_t order() const noexcept { return coeffs.size() - 1; }
  std::uint64_t operator[](std::size_t n) const { return coeffs[n]; }
};

/// Which numbered case of the lattice-sum criterion d belongs to (1..5).
/// Throws UnsupportedD.
int criterion_case(int d);

/// True iff (d, l, r) satisfies the criterion case matching d:
///  1. d = 1, 24r+1 a quadratic non-residue mod l;
///  2. d = 3, 8r+1 a non-residue mod l or 8r+1 = 0 mod l;
///  3. d in {4,8,14}, l = 5 mod 6, 24r+d = 0 mod l;
///  4. d in {6,10}, l >= 5, l = 3 mod 4, 24r+d = 0 mod l;
///  5. d = 26, l = 11 mod 12, 24r+d = 0 mod l.
/// For l = 2 nothing is a non-residue, so cases 1 and 2 never hold there.
bool theorem2_condition(int d, std::uint64_t l, std::uint64_t r);

/// All congruences p_{-a/b}(l n + r) = 0 (mod l) implied by the criterion for
/// primes l <= l_max dividing a + d b. Sorted by (l, r); claims reachable
/// through several d are merged with every provenance kept (ordered by d).
std::vector<Congruence> theorem2_congruences(std::int64_t a, std::int64_t b, std::uint64_t l_max);

/// p_k(0..n) reduced modulo M = l^s. Throws PrimeDividesDenominator if l | den(k).
ResidueSeries residue_series_pk(const FracExponent& k, const arith::PrimePower& modulus, std::size_t n);

/// Multiplies two residue series pointwise-truncated to the smaller order.
ResidueSeries residue_mul(const ResidueSeries& f, const ResidueSeries& g);

/// Checks p_k(P n + r) = 0 mod l^s for every P n + r <= n_max. On success
/// sets c.verified_to = n_max.
VerificationReport verify_congruence(Congruence& c, std::size_t n_max);

/// Same, against an already computed residue series for (c.k, c.modulus).
VerificationReport verify_congruence(Congruence& c, const ResidueSeries& series);

/// Verifies many claims, sharing one residue series per (k, modulus) and
/// running independent groups on up to `threads` workers. Reports come back
/// in input order regardless of scheduling.
std::vector<VerificationReport> verify_all(std::vector<Congruence>& claims, std::size_t n_max,
                                           unsigned threads = 0);

/// Numerical scan for congruences p_k(l^j n + r) = 0 mod l^s, j = 1..s, for
/// every prime l in [l_min, l_max] not dividing den(k). A progression is kept
/// only if at least 10 terms fit below n and all of them vanish; progressions
/// implied by a coarser kept one are dropped. Results are labelled
/// "numerical, unproved". Throws InsufficientSamples when n < 10 l^s - 1.
std::vector<Congruence> discover(const FracExponent& k, std::uint64_t l_min, std::uint64_t l_max, unsigned s,
                                 std::size_t n);

inline constexpr std::uint64_t kMinWitnesses = 10;
inline constexpr const char* kDiscoveryLabel = "numerical, unproved";

/// (q^t;q^t)^{p^j k} = (q^{pt};q^{pt})^{p^{j-1} k} mod p^j, compared to order n.
VerificationReport frobenius_lemma_check(const FracExponent& k, std::uint64_t p, unsigned j, std::uint64_t t,
                                         std::size_t n);

struct DenominatorCheck {
  VerificationReport report;
  std::vector<Integer> observed;   ///< den(p_k(i)), i = 0..n
  std::vector<Integer> predicted;  ///< arith::denom_prediction(k, i)
};

/// Compares every reduced denominator of p_k(0..n) with the closed form.
DenominatorCheck denominator_theorem_check(const FracExponent& k, std::size_t n);

struct ConvolutionReport {
  VerificationReport thirds;    ///< p(n) = sum p_{-1/3}(i) p_{-2/3}(n-i)
  VerificationReport halves;    ///< p(n) = sum p_{-1/2}(i) p_{-1/2}(n-i)
  VerificationReport mod5;      ///< p(5n+4) = 0 mod 5 from the thirds
  VerificationReport mod7;      ///< p(7n+5) = 0 mod 7 from the halves
  bool passed() const { return thirds.passed && halves.passed && mod5.passed && mod7.passed; }
};

/// Checks both convolution identities for p(n) to order n, then re-derives
/// the two classical partition congruences term by term from the vanishing
/// residue classes of the fractional factors.
ConvolutionReport convolution_identity_check(std::size_t n);

}  // namespace etaq::congruence

#endif  // ETAQ_CONGRUENCE_HPP
