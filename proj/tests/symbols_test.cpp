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

#include "hyparr/symbols.hpp"

#include <gtest/gtest.h>

#include "hyparr/cycles.hpp"
#include "hyparr/fixtures.hpp"
#include "support/random_objects.hpp"

namespace hyparr {
namespace {

using testing::Random;

Symbol sym(const char* text) { return Symbol::parse(text); }

TEST(SymbolTest, TextForm) {
  EXPECT_EQ(sym("-4->(-1,-2,-3)").str(), "-4->(-1,-2,-3)");
  EXPECT_EQ(Symbol().str(), "4->(2,1,3)");
  EXPECT_FALSE(is_valid_symbol(Symbol{4, {2, -2, 3}}));
  EXPECT_FALSE(is_valid_symbol(Symbol{4, {2, 1, -4}}));
  EXPECT_TRUE(is_valid_symbol(Symbol{-1, {2, -3, 4}}));
}

TEST(SymbolTest, GeneratorFormulas) {
  EXPECT_EQ(act(Generator::k12, sym("4->(2,1,3)")), sym("-4->(-1,-2,-3)"));
  EXPECT_EQ(act(Generator::k23, sym("1->(2,3,4)")), sym("3->(-2,1,-4)"));
  EXPECT_EQ(act(Generator::k34, sym("1->(2,3,4)")), sym("4->(-2,-3,1)"));
  EXPECT_EQ(act(Generator::k14, sym("1->(2,3,4)")), sym("-1->(-4,-3,-2)"));
}

TEST(SymbolTest, GeneratorRelations) {
  using G = Generator;
  for (const auto& s : all_symbols()) {
    for (G g : kGenerators) ASSERT_EQ(act(g, act(g, s)), s);
    ASSERT_EQ(act(G::k12, act(G::k23, act(G::k12, s))),
              act(G::k23, act(G::k12, act(G::k23, s))));
    ASSERT_EQ(act(G::k12, act(G::k34, s)), act(G::k34, act(G::k12, s)));
  }
}

TEST(SymbolTest, CountsAndOrbits) {
  const auto all = all_symbols();
  EXPECT_EQ(all.size(), 384u);
  const auto os = orbits();
  EXPECT_EQ(os.size(), 16u);
  for (const auto& o : os) EXPECT_EQ(o.size(), 24u);
  EXPECT_EQ(s4_elements().size(), 24u);
  EXPECT_TRUE(s4_elements().front().word.empty());
}

TEST(SymbolTest, ActionIsFree) {
  for (const auto& s : all_symbols()) {
    std::set<Symbol> images;
    for (const auto& g : s4_elements()) images.insert(act(g, s));
    ASSERT_EQ(images.size(), 24u) << s.str();
  }
}

TEST(SymbolTest, NegativeDeterminantSymbols) {
  int negative = 0;
  for (const auto& s : all_symbols()) negative += canonical_triple_sign(s) < 0;
  EXPECT_EQ(negative, 192);
  int orbit_count = 0;
  for (const auto& o : orbits()) {
    const int sign = canonical_triple_sign(*o.begin());
    for (const auto& s : o) ASSERT_EQ(canonical_triple_sign(s), sign);
    orbit_count += sign < 0;
  }
  EXPECT_EQ(orbit_count, 8);
}

TEST(SymbolTest, StandardCompatibleSymbols) {
  std::vector<Symbol> listed = load_fixture("S4-symbols").symbols;
  std::sort(listed.begin(), listed.end());
  EXPECT_EQ(compatible_symbols(standard_s4()), listed);
  EXPECT_EQ(orbit(Symbol()), std::set<Symbol>(listed.begin(), listed.end()));
}

TEST(SymbolTest, RandomArrangementsHaveOneCompatibleOrbit) {
  Random rnd(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto arr = testing::random_sphere_arrangement(rnd, 4, 2);
    const auto syms = compatible_symbols(arr);
    ASSERT_EQ(syms.size(), 24u);
    ASSERT_EQ(orbit(syms.front()), std::set<Symbol>(syms.begin(), syms.end()));
    for (const auto& s : syms) {
      auto rep = [&](int label) {
        const Vector& v = arr.rep(std::abs(label) - 1);
        return label > 0 ? v : scale(v, FieldValue(-1));
      };
      const auto pc = positive_combination(
          rep(s.head), {rep(s.triple[0]), rep(s.triple[1]), rep(s.triple[2])});
      ASSERT_TRUE(pc.is_positive());
      ASSERT_LT(det(Matrix::from_rows(
                        {rep(s.triple[0]), rep(s.triple[1]), rep(s.triple[2])}))
                    .sign(),
                0);
    }
  }
}

CycleInvariantSet cycles_of(const AntipodalArrangement& arr) {
  CycleInvariantSet out;
  for (int i = 0; i < 4; ++i) {
    for (int s : {1, -1}) out[{{}, i, s}] = line_cycle(arr, i, s);
  }
  return out;
}

TEST(SymbolTest, MatchToStandard) {
  const auto s4 = standard_s4();
  auto ws = match_to_standard(cycles_of(s4));
  ASSERT_FALSE(ws.empty());
  EXPECT_EQ(ws.front().bijection(), identity_bijection(4));
  EXPECT_EQ(ws.size(), 48u);

  CycleInvariantSet inverted;
  for (const auto& [key, c] : cycles_of(s4)) inverted[key] = c.inverse();
  ws = match_to_standard(inverted);
  const SignedBijection flip{{0, 1, 2, 3}, {-1, -1, -1, -1}};
  EXPECT_TRUE(std::any_of(ws.begin(), ws.end(), [&](const IsoWitness& w) {
    return w.bijection() == flip;
  }));

  Random rnd(52);
  NormalSystem std_ns{3, {}};
  for (const auto& p : s4.points) std_ns.vectors.push_back(p.rep());
  for (int trial = 0; trial < 20; ++trial) {
    const auto ns = testing::random_normal_system(rnd, 4, 3);
    for (const auto& w : match_to_standard(cycles_of(to_arrangement(ns)))) {
      ASSERT_TRUE(is_convex_positive_bijection(w.bijection(), ns, std_ns));
    }
  }
}

TEST(SymbolTest, Automorphisms) {
  const auto auts = automorphisms(standard_s4());
  ASSERT_EQ(auts.size(), 48u);
  const std::set<std::pair<std::vector<int>, std::vector<int>>> group = [&] {
    std::set<std::pair<std::vector<int>, std::vector<int>>> g;
    for (const auto& a : auts) g.emplace(a.perm, a.signs);
    return g;
  }();
  EXPECT_TRUE(group.count({{0, 1, 2, 3}, {1, 1, 1, 1}}));
  EXPECT_TRUE(group.count({{0, 1, 2, 3}, {-1, -1, -1, -1}}));
  for (const auto& a : auts) {
    const auto inv = invert(a);
    ASSERT_TRUE(group.count({inv.perm, inv.signs}));
    for (const auto& b : auts) {
      const auto ab = compose(a, b);
      ASSERT_TRUE(group.count({ab.perm, ab.signs}));
    }
  }

  Random rnd(53);
  for (int trial = 0; trial < 5; ++trial) {
    EXPECT_EQ(automorphisms(testing::random_sphere_arrangement(rnd, 4, 2)).size(), 48u);
  }
}

}  // namespace
}  // namespace hyparr
