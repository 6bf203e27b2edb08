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


#ifndef ETAQ_CATALOG_HPP
#define ETAQ_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaq/congruence.hpp"

namespace etaq::catalog {

/// Parameters (a, b, d, l) of the lattice-sum criterion that produce a
/// published family: k = -a/b and l divides a + d b.
struct CriterionRow {
  std::int64_t a = 0;
  std::int64_t b = 1;
  int d = 1;
  std::uint64_t l = 2;
};

/// A published family p_k(P n + r) = 0 (mod l^s), r ranging over `residues`.
struct Family {
  std::string id;  ///< statement-derived identifier, e.g. "p[-1/2](49n+r) mod 7^2"
  FracExponent k;
  std::uint64_t prime = 2;
  unsigned exponent = 1;
  std::uint64_t progression_modulus = 2;
  std::vector<std::uint64_t> residues;
  congruence::Provenance::Kind kind = congruence::Provenance::Kind::kPublished;
  std::optional<CriterionRow> row;  ///< set for families derived from the criterion

  /// One congruence record per residue, tagged with this family's provenance.
  std::vector<congruence::Congruence> congruences() const;
  /// Smallest coefficient bound giving every residue `witnesses` progression terms.
  std::size_t order_for_witnesses(std::uint64_t witnesses) const;
};

/// Proved families for positive exponents 1 <= a < b <= 5 (27 statements).
const std::vector<Family>& positive_exponent_families();
/// Proved families for negative exponents -a/b, 1 <= a < b <= 5 (25 statements).
const std::vector<Family>& negative_exponent_families();
/// Both lists above, positive exponents first (52 statements).
std::vector<Family> published_families();
/// Conjectured prime-power families; numerical evidence only.
const std::vector<Family>& conjectured_families();

}  // namespace etaq::catalog

#endif  // ETAQ_CATALOG_HPP
