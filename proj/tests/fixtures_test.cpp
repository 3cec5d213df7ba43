// Copyright 2026 The hyparr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyparr/fixtures.hpp"

#include <gtest/gtest.h>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

TEST(FixturesTest, LoadData) {
  const auto u1 = load_fixture("U1");
  ASSERT_EQ(u1.normal_system.vectors.size(), 6u);
  EXPECT_EQ(u1.normal_system.vectors[3],
            (Vector{Rational(1, 3), Rational(2, 3), Rational(2, 3)}));
  const auto u2 = load_fixture("U2");
  EXPECT_EQ(u2.normal_system.vectors[5],
            (Vector{Rational(2, 11), Rational(6, 11), Rational(9, 11)}));

  const auto s4 = load_fixture("S4-standard");
  ASSERT_EQ(s4.arrangement.size(), 4);
  EXPECT_EQ(s4.arrangement.rep(2), (Vector{FieldValue(0), FieldValue(0), FieldValue(1)}));
  EXPECT_EQ(s4.arrangement.rep(3), (Vector{FieldValue(1), FieldValue(1), FieldValue(1)}));

  EXPECT_THROW(load_fixture("U3"), InvalidObjectError);
}

TEST(FixturesTest, Equations) {
  for (const char* id : {"U1-equations", "U2-equations"}) {
    EXPECT_EQ(load_fixture(id).equations.size(), 15u) << id;
  }
  // 9 u5 = u1 + 4 u2 + 8 u3.
  const Equation eq = load_fixture("U1-equations").equations[1];
  EXPECT_EQ(eq.lhs, (std::vector<std::pair<long, int>>{{9, 4}}));
  EXPECT_EQ(eq.rhs, (std::vector<std::pair<long, int>>{{1, 0}, {4, 1}, {8, 2}}));
}

TEST(FixturesTest, EveryFixtureVerifies) {
  for (const auto& id : fixture_ids()) {
    const auto report = verify_fixture(id);
    EXPECT_TRUE(report.ok()) << id << ": " << report.diffs.front();
    EXPECT_GT(report.checked, 0) << id;
  }
  EXPECT_EQ(verifiable_fixture_ids().size(), 6u);
  EXPECT_EQ(verify_fixture("U1-cycles").checked, 12);
  EXPECT_EQ(verify_fixture("S4-symbols").checked, 24);
}

TEST(FixturesTest, PairGraphDegrees) {
  const auto g1 = compatible_pair_graph(load_fixture("U1-equations").equations);
  const SignedPair v = make_signed_pair({0, -1}, {1, 1});
  ASSERT_TRUE(g1.count(v));
  EXPECT_EQ(g1.at(v).size(), 1u);

  const auto g2 = compatible_pair_graph(load_fixture("U2-equations").equations);
  for (const auto& [vertex, nbrs] : g2) EXPECT_NE(nbrs.size(), 1u);
}

}  // namespace
}  // namespace hyparr
