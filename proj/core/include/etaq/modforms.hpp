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

#ifndef ETAQ_MODFORMS_HPP
#define ETAQ_MODFORMS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "etaq/qseries.hpp"
#include "etaq/report.hpp"

namespace etaq::modforms {

/// A level-one modular form represented by its truncated q-expansion.
struct ModularForm {
  int weight = 0;
  RationalSeries expansion;

  std::size_t order() const { return expansion.order(); }
  const Rational& operator[](std::size_t n) const { return expansion[n]; }
};

/// Product of forms; weights add, orders truncate to the smaller.
ModularForm operator*(const ModularForm& f, const ModularForm& g);
ModularForm pow(const ModularForm& f, unsigned e);

/// Delta = q (q;q)^24, weight 12, to order n.
ModularForm delta(std::size_t n);

/// E6 = 1 - 504 sum sigma_5(n) q^n, weight 6, to order n.
ModularForm e6(std::size_t n);

/// tau(1..n) read off the Delta expansion; index 0 holds tau(0) = 0.
std::vector<Integer> tau_values(std::size_t n);

/// For every applicable index up to n:
///   tau(i) = i sigma_3(i) mod 7,
///   tau(7i) = 14 tau(i) mod 49,
///   tau(7i+s) = 0 mod 7 for s in {0, 3, 5, 6}.
VerificationReport tau_congruence_checks(std::size_t n);

/// The Hecke operator T(m): coefficient n becomes
/// sum_{d | gcd(m, n)} d^{w-1} a(n m / d^2). Result order is order(f) / m.
ModularForm hecke_T(const ModularForm& f, std::uint64_t m);

/// U(m): coefficient n becomes a(m n). Result order is order(f) / m.
RationalSeries u_operator(const RationalSeries& f, std::uint64_t m);

/// B_i = Delta^{7-i} E6^{2(i-1)}, i = 1..6: a basis of the weight-72 cusp
/// forms in which B_i starts with q^{7-i}.
std::array<ModularForm, 6> s72_basis(std::size_t n);

struct BasisDecomposition {
  std::array<Rational, 6> coefficients;  ///< a_1..a_6
  std::size_t residual_checked_to = 0;
};

/// Solves f = sum a_i B_i from the coefficients of q^1..q^6 by back
/// substitution, then checks the reconstruction through
/// min(f.order(), basis order). Throws ReconstructionMismatch.
BasisDecomposition decompose_in_basis(const ModularForm& f, const std::array<ModularForm, 6>& basis);
BasisDecomposition decompose_in_basis(const ModularForm& f);

struct ProofReport {
  BasisDecomposition decomposition;
  std::array<unsigned, 6> valuations{};  ///< ord_17(a_i)
  bool valuations_ok = false;            ///< (3, 2, 2, 2, 2, 2)
  VerificationReport residue_check;      ///< p_{-1/2}(289n+283) = 0 mod 289
  bool agree = false;
};

/// Expands Delta^6 far enough to apply T(17) twice, decomposes the image
/// in the weight-72 basis and checks the 17-adic valuations of a_1..a_6;
/// independently checks p_{-1/2}(289n+283) = 0 mod 289 up to n_check.
/// `image_order` is the order of T(17)^2 Delta^6 used for the
/// reconstruction check (at least 6).
ProofReport modular_proof_289(std::size_t n_check, std::size_t image_order = 12);

}  // namespace etaq::modforms

#endif  // ETAQ_MODFORMS_HPP
