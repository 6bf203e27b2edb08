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


#include "etaq/catalog.hpp"

#include <algorithm>

namespace etaq::catalog {

using congruence::Provenance;
using Kind = Provenance::Kind;

namespace {

std::string family_id(const FracExponent& k, std::uint64_t prime, unsigned exponent, std::uint64_t progression,
                      const std::vector<std::uint64_t>& residues) {
  std::string id = "p[" + k.to_string() + "](" + std::to_string(progression) + "n+";
  id += residues.size() == 1 ? std::to_string(residues.front()) : std::string("r");
  id += ") mod " + std::to_string(prime);
  if (exponent > 1) id += "^" + std::to_string(exponent);
  return id;
}

Family make_family(std::int64_t ka, std::int64_t kb, std::uint64_t prime, unsigned exponent,
                   std::uint64_t progression, std::vector<std::uint64_t> residues, Kind kind,
                   std::optional<CriterionRow> row) {
  Family f;
  f.k = FracExponent(ka, kb);
  f.prime = prime;
  f.exponent = exponent;
  f.progression_modulus = progression;
  f.residues = std::move(residues);
  f.kind = kind;
  f.row = row;
  f.id = family_id(f.k, prime, exponent, progression, f.residues);
  return f;
}

}  // namespace

std::vector<congruence::Congruence> Family::congruences() const {
  std::vector<congruence::Congruence> out;
  out.reserve(residues.size());
  for (auto r : residues) {
    Provenance p;
    p.kind = kind;
    p.label = id;
    if (row) p.d = row->d;
    out.push_back(congruence::make_congruence(k, arith::PrimePower(prime, exponent), progression_modulus, r, {p}));
  }
  return out;
}

std::size_t Family::order_for_witnesses(std::uint64_t witnesses) const {
  const auto r_max = *std::max_element(residues.begin(), residues.end());
  return static_cast<std::size_t>(progression_modulus * (witnesses - 1) + r_max);
}

const std::vector<Family>& positive_exponent_families() {
  static const std::vector<Family> list = {
    make_family(1, 2, 5, 1, 5, {2, 3, 4}, Kind::kPublished, CriterionRow{-1, 2, 3, 5}),
    make_family(1, 2, 11, 1, 11, {8}, Kind::kPublished, CriterionRow{-1, 2, 6, 11}),
    make_family(1, 2, 19, 1, 19, {17}, Kind::kPublished, CriterionRow{-1, 2, 10, 19}),
    make_family(1, 3, 11, 1, 11, {9}, Kind::kPublished, CriterionRow{-1, 3, 4, 11}),
    make_family(1, 3, 17, 1, 17, {4}, Kind::kPublished, CriterionRow{-1, 3, 6, 17}),
    make_family(1, 3, 23, 1, 23, {15}, Kind::kPublished, CriterionRow{-1, 3, 8, 23}),
    make_family(1, 3, 41, 1, 41, {37}, Kind::kPublished, CriterionRow{-1, 3, 14, 41}),
    make_family(2, 3, 5, 1, 5, {4}, Kind::kPublished, CriterionRow{-2, 3, 4, 5}),
    make_family(2, 3, 7, 1, 7, {2, 4, 5, 6}, Kind::kPublished, CriterionRow{-2, 3, 3, 7}),
    make_family(2, 3, 11, 1, 11, {7}, Kind::kPublished, CriterionRow{-2, 3, 8, 11}),
    make_family(1, 4, 5, 1, 5, {4}, Kind::kPublished, CriterionRow{-1, 4, 4, 5}),
    make_family(1, 4, 11, 1, 11, {2, 4, 5, 7, 9, 10}, Kind::kPublished, CriterionRow{-1, 4, 3, 11}),
    make_family(1, 4, 23, 1, 23, {17}, Kind::kPublished, CriterionRow{-1, 4, 6, 23}),
    make_family(3, 4, 7, 1, 7, {5}, Kind::kPublished, CriterionRow{-3, 4, 6, 7}),
    make_family(3, 4, 29, 1, 29, {19}, Kind::kPublished, CriterionRow{-3, 4, 8, 29}),
    make_family(3, 4, 53, 1, 53, {48}, Kind::kPublished, CriterionRow{-3, 4, 14, 53}),
    make_family(1, 5, 7, 1, 7, {2, 4, 5, 6}, Kind::kPublished, CriterionRow{-1, 5, 3, 7}),
    make_family(1, 5, 7, 2, 7, {6}, Kind::kPublished, std::nullopt),
    make_family(1, 5, 23, 1, 23, {9}, Kind::kPublished, CriterionRow{-1, 5, 14, 23}),
    make_family(2, 5, 7, 1, 7, {5}, Kind::kPublished, CriterionRow{-2, 5, 6, 7}),
    make_family(2, 5, 13, 1, 13, {4, 5, 7, 8, 9, 11, 12}, Kind::kPublished, CriterionRow{-2, 5, 3, 13}),
    make_family(2, 5, 17, 1, 17, {15}, Kind::kPublished, CriterionRow{-2, 5, 14, 17}),
    make_family(3, 5, 17, 1, 17, {14}, Kind::kPublished, CriterionRow{-3, 5, 4, 17}),
    make_family(3, 5, 47, 1, 47, {27}, Kind::kPublished, CriterionRow{-3, 5, 10, 47}),
    make_family(3, 5, 59, 1, 59, {53}, Kind::kPublished, CriterionRow{-3, 5, 26, 59}),
    make_family(4, 5, 11, 1, 11, {2, 4, 5, 7, 8, 9}, Kind::kPublished, CriterionRow{-4, 5, 3, 11}),
    make_family(4, 5, 23, 1, 23, {13}, Kind::kPublished, CriterionRow{-4, 5, 10, 23}),
  };
  return list;
}

const std::vector<Family>& negative_exponent_families() {
  static const std::vector<Family> list = {
    make_family(-1, 2, 7, 1, 7, {2, 4, 5, 6}, Kind::kPublished, CriterionRow{1, 2, 3, 7}),
    make_family(-1, 2, 7, 2, 49, {20, 34, 41, 48}, Kind::kPublished, std::nullopt),
    make_family(-1, 2, 17, 1, 17, {11}, Kind::kPublished, CriterionRow{1, 2, 8, 17}),
    make_family(-1, 2, 29, 1, 29, {26}, Kind::kPublished, CriterionRow{1, 2, 14, 29}),
    make_family(-1, 3, 5, 1, 5, {2, 3, 4}, Kind::kPublished, CriterionRow{1, 3, 3, 5}),
    make_family(-1, 3, 5, 2, 5, {3}, Kind::kPublished, std::nullopt),
    make_family(-1, 3, 19, 1, 19, {14}, Kind::kPublished, CriterionRow{1, 3, 6, 19}),
    make_family(-1, 3, 31, 1, 31, {28}, Kind::kPublished, CriterionRow{1, 3, 10, 31}),
    make_family(-2, 3, 5, 1, 5, {3, 4}, Kind::kPublished, CriterionRow{2, 3, 1, 5}),
    make_family(-2, 3, 11, 1, 11, {2, 4, 5, 7, 8, 9}, Kind::kPublished, CriterionRow{2, 3, 3, 11}),
    make_family(-1, 4, 5, 1, 5, {3, 4}, Kind::kPublished, CriterionRow{1, 4, 1, 5}),
    make_family(-1, 4, 13, 1, 13, {4, 5, 7, 8, 9, 11, 12}, Kind::kPublished, CriterionRow{1, 4, 3, 13}),
    make_family(-3, 4, 5, 1, 5, {2, 3, 4}, Kind::kPublished, CriterionRow{3, 4, 3, 5}),
    make_family(-3, 4, 43, 1, 43, {39}, Kind::kPublished, CriterionRow{3, 4, 10, 43}),
    make_family(-3, 4, 59, 1, 59, {24}, Kind::kPublished, CriterionRow{3, 4, 14, 59}),
    make_family(-3, 4, 107, 1, 107, {97}, Kind::kPublished, CriterionRow{3, 4, 26, 107}),
    make_family(-1, 5, 31, 1, 31, {23}, Kind::kPublished, CriterionRow{1, 5, 6, 31}),
    make_family(-1, 5, 71, 1, 71, {29}, Kind::kPublished, CriterionRow{1, 5, 14, 71}),
    make_family(-1, 5, 131, 1, 131, {119}, Kind::kPublished, CriterionRow{1, 5, 26, 131}),
    make_family(-2, 5, 7, 1, 7, {3, 4, 6}, Kind::kPublished, CriterionRow{2, 5, 1, 7}),
    make_family(-2, 5, 11, 1, 11, {9}, Kind::kPublished, CriterionRow{2, 5, 4, 11}),
    make_family(-2, 5, 17, 1, 17, {2, 5, 7, 8, 9, 12, 13, 14, 16}, Kind::kPublished, CriterionRow{2, 5, 3, 17}),
    make_family(-3, 5, 11, 1, 11, {8}, Kind::kPublished, CriterionRow{3, 5, 6, 11}),
    make_family(-4, 5, 11, 1, 11, {7}, Kind::kPublished, CriterionRow{4, 5, 8, 11}),
    make_family(-4, 5, 19, 1, 19, {4, 5, 7, 8, 11, 12, 13, 14, 16, 18}, Kind::kPublished, CriterionRow{4, 5, 3, 19}),
  };
  return list;
}

std::vector<Family> published_families() {
  std::vector<Family> all = positive_exponent_families();
  const auto& neg = negative_exponent_families();
  all.insert(all.end(), neg.begin(), neg.end());
  return all;
}

const std::vector<Family>& conjectured_families() {
  static const std::vector<Family> list = {
    make_family(1, 2, 5, 2, 125, {38, 63, 88, 113}, Kind::kConjecture, std::nullopt),
    make_family(2, 3, 5, 2, 25, {19, 24}, Kind::kConjecture, std::nullopt),
    make_family(2, 3, 11, 2, 121, {84}, Kind::kConjecture, std::nullopt),
    make_family(1, 4, 5, 2, 25, {14, 24}, Kind::kConjecture, std::nullopt),
    make_family(1, 4, 5, 3, 25, {19}, Kind::kConjecture, std::nullopt),
    make_family(1, 4, 11, 2, 121, {92}, Kind::kConjecture, std::nullopt),
    make_family(1, 5, 7, 3, 49, {27, 34, 48}, Kind::kConjecture, std::nullopt),
    make_family(2, 5, 7, 2, 49, {40}, Kind::kConjecture, std::nullopt),
    make_family(-1, 2, 7, 3, 343, {293}, Kind::kConjecture, std::nullopt),
    make_family(-1, 2, 7, 4, 2401, {979, 1665, 2008, 2351}, Kind::kConjecture, std::nullopt),
    make_family(-1, 2, 17, 2, 289, {283}, Kind::kConjecture, std::nullopt),
    make_family(-1, 3, 5, 3, 25, {18, 23}, Kind::kConjecture, std::nullopt),
    make_family(-1, 3, 19, 2, 361, {356}, Kind::kConjecture, std::nullopt),
    make_family(-2, 3, 7, 1, 49, {22, 29, 43}, Kind::kConjecture, std::nullopt),
    make_family(-3, 4, 5, 2, 25, {13, 23}, Kind::kConjecture, std::nullopt),
    make_family(-3, 4, 5, 3, 25, {18}, Kind::kConjecture, std::nullopt),
    make_family(-3, 4, 5, 5, 125, {93, 118}, Kind::kConjecture, std::nullopt),
  };
  return list;
}

}  // namespace etaq::catalog
