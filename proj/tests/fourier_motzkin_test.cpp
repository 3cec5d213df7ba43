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

#include "hyparr/fourier_motzkin.hpp"

#include <gtest/gtest.h>

#include "support/random_objects.hpp"

namespace hyparr {
namespace {

using testing::Random;

LinearInequality row(std::initializer_list<long> coeffs, long rhs, bool strict) {
  Vector v;
  for (long c : coeffs) v.emplace_back(c);
  return LinearInequality{v, FieldValue(rhs), strict};
}

bool satisfies(const std::vector<LinearInequality>& rows, const Vector& x) {
  for (const auto& r : rows) {
    const int s = (dot(r.coeffs, x) - r.rhs).sign();
    if (s < 0 || (r.strict && s == 0)) return false;
  }
  return true;
}

TEST(FourierMotzkinTest, SmallSystems) {
  // 0 < x < 1, 0 < y < 1, x + y > 3/2 scaled by 2.
  std::vector<LinearInequality> rows = {
      row({1, 0}, 0, true), row({-1, 0}, -1, true), row({0, 1}, 0, true),
      row({0, -1}, -1, true), row({2, 2}, 3, true)};
  auto r = fm_feasible(rows, 2);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(rows, r.point));

  rows.push_back(row({-1, -1}, -1, false));  // x + y <= 1
  EXPECT_FALSE(fm_feasible(rows, 2).feasible);
}

TEST(FourierMotzkinTest, StrictnessMatters) {
  const std::vector<LinearInequality> closed = {row({1}, 0, false),
                                                row({-1}, 0, false)};
  EXPECT_TRUE(fm_feasible(closed, 1).feasible);
  const std::vector<LinearInequality> open = {row({1}, 0, true),
                                              row({-1}, 0, false)};
  EXPECT_FALSE(fm_feasible(open, 1).feasible);
}

TEST(FourierMotzkinTest, EmptyAndTrivial) {
  EXPECT_TRUE(fm_feasible({}, 3).feasible);
  EXPECT_FALSE(fm_feasible({row({0, 0}, 1, false)}, 2).feasible);
  EXPECT_TRUE(fm_feasible({row({0, 0}, -1, true)}, 2).feasible);
}

// Feasible systems built around a known point always report a satisfying
// point; perturbing into contradiction is detected.
TEST(FourierMotzkinTest, RandomSystemsAroundAPoint) {
  Random rnd(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rnd.uniform(1, 4);
    const Vector x0 = rnd.vector(dim, 5);
    std::vector<LinearInequality> rows;
    const int count = rnd.uniform(1, 9);
    for (int i = 0; i < count; ++i) {
      const Vector a = rnd.vector(dim, 4);
      const FieldValue slack = rnd.uniform(0, 1) ? FieldValue(0) : rnd.positive(3);
      const bool strict = slack.sign() > 0 && rnd.uniform(0, 1);
      rows.push_back({a, dot(a, x0) - slack, strict});
    }
    const auto r = fm_feasible(rows, dim);
    ASSERT_TRUE(r.feasible);
    ASSERT_TRUE(satisfies(rows, r.point));

    // a.x > b and a.x < b together are infeasible.
    auto bad = rows;
    const Vector a = rnd.vector(dim, 4);
    const FieldValue b = rnd.small(5);
    bad.push_back({a, b, true});
    bad.push_back({scale(a, FieldValue(-1)), -b, false});
    ASSERT_FALSE(fm_feasible(bad, dim).feasible);
  }
}

}  // namespace
}  // namespace hyparr
