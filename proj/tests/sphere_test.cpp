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

#include "hyparr/sphere.hpp"

#include <gtest/gtest.h>

#include "hyparr/combinatorics.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/fixtures.hpp"
#include "hyparr/symbols.hpp"
#include "support/random_objects.hpp"

namespace hyparr {
namespace {

using testing::Random;

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

AntipodalArrangement u1_arrangement() {
  return to_arrangement(load_fixture("U1").normal_system);
}

TEST(SphereTest, Canonicalize) {
  EXPECT_EQ(SpherePoint::canonicalize(vec({2, 4, 0})).rep(), vec({1, 2, 0}));
  EXPECT_EQ(SpherePoint::canonicalize(vec({-3, 0, 6})).rep(), vec({-1, 0, 2}));
  const auto p = SpherePoint::canonicalize(vec({1, 2, 0}));
  EXPECT_EQ(p.antipode().rep(), vec({-1, -2, 0}));
  EXPECT_EQ(p.antipode().antipode(), p);
  EXPECT_EQ(SpherePoint::canonicalize(p.rep()), p);
  EXPECT_THROW(SpherePoint::canonicalize(vec({0, 0, 0})), InvalidObjectError);
}

TEST(SphereTest, Independence) {
  const auto s4 = standard_s4();
  EXPECT_TRUE(independent({s4.points[0], s4.points[1], s4.points[2]}));
  const auto e1 = SpherePoint::canonicalize(vec({1, 0, 0}));
  EXPECT_FALSE(independent({e1, e1.antipode()}));
  const auto u1 = u1_arrangement();
  for (const auto& s : combinations(6, 3)) {
    EXPECT_TRUE(independent({u1.points[s[0]], u1.points[s[1]], u1.points[s[2]]}));
  }
  EXPECT_THROW(independent({}), DimensionError);
  EXPECT_THROW(independent({e1, e1, e1, e1}), DimensionError);
}

TEST(SphereTest, PositiveCombination) {
  const auto& u = load_fixture("U1").normal_system.vectors;
  auto pc = positive_combination(u[3], {u[0], u[1], u[2]});
  EXPECT_EQ(pc.coefficients, (Vector{Rational(1, 3), Rational(2, 3), Rational(2, 3)}));
  EXPECT_EQ(pc.signs, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(pc.is_positive());

  pc = positive_combination(u[0], {u[1], u[3], u[5]});
  EXPECT_EQ(pc.coefficients,
            (Vector{Rational(2, 5), Rational(-21, 5), Rational(22, 5)}));
  EXPECT_EQ(pc.signs, (std::vector<int>{1, -1, 1}));
  EXPECT_FALSE(pc.is_positive());

  pc = positive_combination(vec({1, 1, 1}),
                            {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(pc.coefficients, vec({1, 1, 1}));

  EXPECT_THROW(positive_combination(vec({1, 1}), {vec({1, 0}), vec({2, 0})}),
               SingularMatrixError);
}

TEST(SphereTest, SignsIgnoreRepresentatives) {
  Random rnd(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ns = testing::random_normal_system(rnd, 4, 3);
    std::vector<Vector> basis = {ns.vectors[0], ns.vectors[1], ns.vectors[2]};
    const auto before = positive_combination(ns.vectors[3], basis).signs;
    for (auto& b : basis) b = scale(b, rnd.positive(9));
    const auto after =
        positive_combination(scale(ns.vectors[3], rnd.positive(9)), basis).signs;
    ASSERT_EQ(before, after);
  }
}

TEST(SphereTest, ValidateArrangement) {
  EXPECT_TRUE(validate_arrangement(u1_arrangement()).valid);
  AntipodalArrangement bad{2,
                           {SpherePoint::canonicalize(vec({1, 0, 0})),
                            SpherePoint::canonicalize(vec({0, 1, 0})),
                            SpherePoint::canonicalize(vec({1, 1, 0}))}};
  const auto d = validate_arrangement(bad);
  EXPECT_FALSE(d.valid);
  EXPECT_EQ(d.violating, (std::vector<int>{0, 1, 2}));

  AntipodalArrangement antipodal{2,
                                 {SpherePoint::canonicalize(vec({1, 0, 0})),
                                  SpherePoint::canonicalize(vec({-1, 0, 0}))}};
  EXPECT_FALSE(validate_arrangement(antipodal).valid);
}

TEST(SphereTest, ValidateAgreesWithRankOracle) {
  Random rnd(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rnd.uniform(2, 6);
    std::vector<SpherePoint> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Vector v = rnd.vector(3, 1);
      if (!is_zero(v)) pts.push_back(SpherePoint::canonicalize(v));
    }
    bool expected = true;
    for (const auto& s : combinations(n, std::min(3, n))) {
      std::vector<Vector> rs;
      for (int i : s) rs.push_back(pts[i].rep());
      if (rank(Matrix::from_rows(rs)) != s.size()) expected = false;
    }
    ASSERT_EQ(validate_arrangement(AntipodalArrangement{2, pts}).valid, expected);
  }
}

TEST(SphereTest, OrientedComplement) {
  const std::vector<Vector> rows = {vec({1, 2, 3, 4})};
  const auto basis = oriented_complement(rows);
  ASSERT_EQ(basis.size(), 3u);
  std::vector<Vector> all = rows;
  all.insert(all.end(), basis.begin(), basis.end());
  EXPECT_GT(det(Matrix::from_rows(all)).sign(), 0);
  for (const auto& b : basis) EXPECT_TRUE(dot(b, rows[0]).is_zero());
}

TEST(SphereTest, ProjectArrangement) {
  const auto u1 = u1_arrangement();
  const auto same = project_arrangement(u1, {});
  EXPECT_EQ(same.labels, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(same.arrangement.k, 2);

  const auto p = project_arrangement(u1, {0});
  EXPECT_EQ(p.arrangement.k, 1);
  EXPECT_EQ(p.labels, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(validate_arrangement(p.arrangement).valid);

  EXPECT_THROW(project_arrangement(standard_s4(), {0, 1, 2}), DimensionError);
}

// Coefficients of P_j over a basis containing P_a keep their signs after
// projecting along {a}.
TEST(SphereTest, ProjectionPreservesSigns) {
  Random rnd(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = rnd.uniform(3, 4);
    const int n = rnd.uniform(k + 2, 7);
    const auto arr = testing::random_sphere_arrangement(rnd, n, k);
    for (int a = 0; a < n; ++a) {
      const auto proj = project_arrangement(arr, {a});
      std::vector<int> slot(n, -1);
      for (std::size_t t = 0; t < proj.labels.size(); ++t) slot[proj.labels[t]] = t;
      for (int j = 0; j < n; ++j) {
        if (j == a) continue;
        std::vector<int> others;
        for (int x = 0; x < n; ++x) {
          if (x != a && x != j) others.push_back(x);
        }
        for (const auto& pick : combinations(static_cast<int>(others.size()), k)) {
          std::vector<Vector> basis = {arr.rep(a)};
          std::vector<Vector> projected;
          for (int idx : pick) {
            basis.push_back(arr.rep(others[idx]));
            projected.push_back(proj.arrangement.rep(slot[others[idx]]));
          }
          const auto full = positive_combination(arr.rep(j), basis);
          const auto low =
              positive_combination(proj.arrangement.rep(slot[j]), projected);
          ASSERT_EQ(std::vector<int>(full.signs.begin() + 1, full.signs.end()),
                    low.signs);
        }
      }
    }
  }
}

TEST(SphereTest, ProjectionCommutesWithRelabeling) {
  Random rnd(24);
  for (int trial = 0; trial < 20; ++trial) {
    const auto arr = testing::random_sphere_arrangement(rnd, 6, 3);
    const auto perm = rnd.permutation(6);
    AntipodalArrangement relabeled = arr;
    for (int i = 0; i < 6; ++i) relabeled.points[perm[i]] = arr.points[i];
    const int a = rnd.uniform(0, 5);
    const auto p1 = project_arrangement(arr, {a});
    const auto p2 = project_arrangement(relabeled, {perm[a]});
    for (std::size_t t = 0; t < p1.labels.size(); ++t) {
      const int target = perm[p1.labels[t]];
      const auto it = std::find(p2.labels.begin(), p2.labels.end(), target);
      ASSERT_NE(it, p2.labels.end());
      ASSERT_EQ(p1.arrangement.points[t],
                p2.arrangement.points[it - p2.labels.begin()]);
    }
  }
}

}  // namespace
}  // namespace hyparr
