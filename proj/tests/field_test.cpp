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

#include "hyparr/field.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

FieldValue q(long a, long b = 1) { return FieldValue(Rational(a, b)); }

FieldValue quad(Rational a, Rational b, std::int64_t d) {
  return FieldValue(QuadExtValue{std::move(a), std::move(b), d});
}

TEST(RationalTest, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_GT(r.denominator(), 0);
  EXPECT_THROW(Rational(1, 0), FieldError);
}

TEST(RationalTest, ParseRoundTrip) {
  for (const char* text : {"0", "7", "-7", "5/6", "-12/35"}) {
    EXPECT_EQ(Rational::parse(text).str(), text);
  }
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
}

TEST(FieldTest, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 9) * q(9), q(1));
  EXPECT_EQ(q(1) / q(4), q(1, 4));
  EXPECT_THROW(q(1) / q(0), FieldError);

  const FieldValue x = quad(1, 1, 2);
  const FieldValue y = quad(1, -1, 2);
  const FieldValue p = x * y;
  EXPECT_EQ(p, quad(-1, 0, 2));
  EXPECT_EQ(p.str(), "-1+0*sqrt(2)");
  EXPECT_EQ(x * x.inverse(), FieldValue::one(FieldTag::quadratic(2)));
}

TEST(FieldTest, QuadraticSignCases) {
  EXPECT_EQ(quad(1, -1, 2).sign(), -1);
  EXPECT_EQ(quad(0, 0, 2).sign(), 0);
  EXPECT_EQ(quad(3, 1, 5).sign(), 1);
  EXPECT_EQ(quad(2, -1, 3).sign(), 1);   // 4 > 3
  EXPECT_EQ(quad(-2, 1, 5).sign(), 1);   // 5 > 4
  EXPECT_EQ(quad(-2, 1, 3).sign(), -1);  // 3 < 4
  EXPECT_EQ(quad(0, 1, 7).sign(), 1);
  EXPECT_EQ(quad(0, -1, 7).sign(), -1);
  EXPECT_EQ(quad(-1, 0, 7).sign(), -1);
  EXPECT_EQ(quad(1, 0, 7).sign(), 1);
  EXPECT_EQ(quad(-1, -1, 7).sign(), -1);
}

TEST(FieldTest, Compare) {
  EXPECT_EQ(cmp(q(1, 3), q(2, 7)), std::strong_ordering::greater);
  EXPECT_EQ(cmp(quad(0, 1, 2), quad(Rational(3, 2), 0, 2)),
            std::strong_ordering::less);
  const FieldValue x = quad(Rational(5, 7), -3, 11);
  EXPECT_EQ(cmp(x, x), std::strong_ordering::equal);
}

TEST(FieldTest, MixedTagsThrow) {
  EXPECT_THROW(q(1) + quad(1, 1, 2), FieldError);
  EXPECT_THROW(quad(1, 1, 2) * quad(1, 1, 3), FieldError);
  EXPECT_THROW((void)cmp(quad(1, 1, 2), quad(1, 1, 5)), FieldError);
}

TEST(FieldTest, TagValidation) {
  EXPECT_THROW(FieldTag::quadratic(4), FieldError);
  EXPECT_THROW(FieldTag::quadratic(-3), FieldError);
  EXPECT_THROW(FieldTag::quadratic(1), FieldError);
  EXPECT_EQ(FieldTag::quadratic(6).str(), "Q(sqrt(6))");
  EXPECT_TRUE(is_square_free(30));
  EXPECT_FALSE(is_square_free(18));
}

TEST(FieldTest, TextRoundTrip) {
  for (const char* text : {"3/4", "-2", "1/2+3/5*sqrt(7)", "-1-2*sqrt(3)"}) {
    EXPECT_EQ(FieldValue::parse(text).str(), text);
  }
  EXPECT_THROW(FieldValue::parse("1+1*sqrt(8)"), ParseError);
  EXPECT_THROW(FieldValue::parse("1+sqrt"), ParseError);
}

class FieldPropertyTest : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(FieldPropertyTest, OrderAxioms) {
  const std::int64_t d = GetParam();
  std::mt19937_64 rng(d);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  auto draw = [&] {
    return d == 0 ? q(num(rng), den(rng))
                  : quad(Rational(num(rng), den(rng)),
                         Rational(num(rng), den(rng)), d);
  };
  const FieldValue zero = d == 0 ? q(0) : FieldValue::zero(FieldTag::quadratic(d));
  for (int i = 0; i < 500; ++i) {
    const FieldValue x = draw(), y = draw(), z = draw();
    if (x <= y) {
      EXPECT_LE(x + z, y + z);
    }
    if (x >= zero && y >= zero) {
      EXPECT_GE(x * y, zero);
    }
    EXPECT_EQ(cmp(x, y), (x - y).sign() <=> 0);
    EXPECT_EQ(cmp(x, y), 0 <=> cmp(y, x));
    if (x <= y && y <= z) {
      EXPECT_LE(x, z);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldPropertyTest,
                         ::testing::Values(0, 2, 3, 5, 7, 30));

TEST(FieldTest, QuadraticSignMatchesFloatingPoint) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 50);
  const std::int64_t ds[] = {2, 3, 5, 6, 7, 10, 11, 13};
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t d = ds[i % 8];
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const long double value =
        static_cast<long double>(a.to_double()) +
        static_cast<long double>(b.to_double()) * std::sqrt(static_cast<long double>(d));
    if (std::fabs(value) <= 1e-6L) continue;
    ++checked;
    ASSERT_EQ(quad(a, b, d).sign(), value > 0 ? 1 : -1)
        << a.str() << " " << b.str() << " " << d;
  }
  EXPECT_GT(checked, 9900);
}

}  // namespace
}  // namespace hyparr
