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

#include <set>

#include "etaq/catalog.hpp"

namespace etaq::catalog {
namespace {

std::size_t statements(const std::vector<Family>& fs) { return fs.size(); }

TEST(Catalog, Sizes) {
  EXPECT_EQ(statements(positive_exponent_families()), 27u);
  EXPECT_EQ(statements(negative_exponent_families()), 25u);
  EXPECT_EQ(published_families().size(), 52u);
  EXPECT_EQ(conjectured_families().size(), 17u);
}

TEST(Catalog, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& f : published_families()) EXPECT_TRUE(ids.insert(f.id).second) << f.id;
  for (const auto& f : conjectured_families()) EXPECT_TRUE(ids.insert(f.id).second) << f.id;
}

TEST(Catalog, ExponentRanges) {
  for (const auto& f : positive_exponent_families()) {
    EXPECT_GT(f.k.num(), 0);
    EXPECT_LT(f.k.num(), f.k.den());
    EXPECT_LE(f.k.den(), 5);
  }
  for (const auto& f : negative_exponent_families()) {
    EXPECT_LT(f.k.num(), 0);
    EXPECT_LT(-f.k.num(), f.k.den());
  }
}

TEST(Catalog, CriterionRowsAreConsistent) {
  int rows = 0;
  for (const auto& f : published_families()) {
    if (!f.row) continue;
    ++rows;
    EXPECT_EQ(FracExponent(-f.row->a, f.row->b), f.k) << f.id;
    EXPECT_EQ(f.row->l, f.prime) << f.id;
    EXPECT_EQ(f.exponent, 1u) << f.id;
  }
  EXPECT_EQ(rows, 49);
}

TEST(Catalog, CongruenceRecords) {
  const auto& f = negative_exponent_families()[1];  // p_{-1/2}(49n+r) mod 49
  EXPECT_EQ(f.id, "p[-1/2](49n+r) mod 7^2");
  const auto cs = f.congruences();
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs[0].statement(), "p_{-1/2}(49n+20) = 0 mod 49");
  EXPECT_EQ(cs[0].provenance.at(0).kind, congruence::Provenance::Kind::kPublished);
  EXPECT_EQ(cs[0].provenance.at(0).label, f.id);
  EXPECT_EQ(f.order_for_witnesses(11), 49u * 10 + 48);
}

TEST(Catalog, ConjectureLargestFamily) {
  bool seen = false;
  for (const auto& f : conjectured_families())
    if (f.progression_modulus == 2401) {
      seen = true;
      EXPECT_EQ(f.order_for_witnesses(11), 26361u);
      EXPECT_EQ(f.kind, congruence::Provenance::Kind::kConjecture);
    }
  EXPECT_TRUE(seen);
}

}  // namespace
}  // namespace etaq::catalog
