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

#ifndef ETAQ_IDENTITIES_HPP
#define ETAQ_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "etaq/rational.hpp"
#include "etaq/report.hpp"

namespace etaq::identities {

/// The exponents d for which (q;q)_inf^d has a lattice-sum expansion.
inline constexpr std::array<int, 8> kSupportedD{1, 3, 4, 6, 8, 10, 14, 26};

bool is_supported(int d) noexcept;

/// Integer coefficients of (q;q)_inf^d up to q^order, produced from a
/// closed-form lattice sum.
struct EtaPowerExpansion {
  int d = 0;
  std::size_t order = 0;
  std::vector<Integer> coeffs;
};

// Each expansion enumerates lattice points in a window that covers every
// exponent <= n with a margin of 2; `extra_margin` widens it further (the
// result must not change).

/// sum_i (-1)^i q^{i(3i+1)/2}
EtaPowerExpansion expand_eta_1(std::size_t n, int extra_margin = 0);
/// sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}
EtaPowerExpansion expand_eta_3(std::size_t n, int extra_margin = 0);
/// sum_{i, j>=0} (-1)^{i+j} (2j+1) q^{i(3i+1)/2 + j(j+1)/2}
EtaPowerExpansion expand_eta_4(std::size_t n, int extra_margin = 0);
/// sum_{i,j>=0} (-1)^{i+j} (2i+1)(2j+1) q^{i(i+1)/2 + j(j+1)/2}
EtaPowerExpansion expand_eta_6(std::size_t n, int extra_margin = 0);
/// (4/3) A(q) theta(q) - (1/3) C(q) psi(q), products of single sums.
EtaPowerExpansion expand_eta_8(std::size_t n, int extra_margin = 0);
/// (4/3) A(q) E(q) - (1/3) F(q) G(q), products of single sums.
EtaPowerExpansion expand_eta_10(std::size_t n, int extra_margin = 0);
/// -(1/15) times a sextic-weighted double sum over Z^2.
EtaPowerExpansion expand_eta_14(std::size_t n, int extra_margin = 0);
/// Two f-weighted double sums over Z^2, divided by 16308864.
EtaPowerExpansion expand_eta_26(std::size_t n, int extra_margin = 0);

/// Dispatches on d. Throws UnsupportedD.
EtaPowerExpansion expand_eta(int d, std::size_t n, int extra_margin = 0);

/// f(m, n) = sum_{j=0}^{6} C(12, 2j) (-1)^j m^j n^{6-j}, with 0^0 = 1.
Rational f_poly(const Rational& m, const Rational& n);

/// 16308864 = 2^7 * 3^4 * 11^2 * 13
inline constexpr long kEta26Divisor = 16308864;

/// Compares expand_eta(d, n) with the d-th power of the directly expanded
/// Euler product, coefficient by coefficient.
VerificationReport verify_identity(int d, std::size_t n);

}  // namespace etaq::identities

#endif  // ETAQ_IDENTITIES_HPP
