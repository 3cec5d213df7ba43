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

#ifndef HYPARR_FIELD_HPP_
#define HYPARR_FIELD_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace hyparr {

// Arbitrary-precision rational in canonical form (den > 0, gcd(num, den) = 1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading sign; q must be nonzero.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  double to_double() const { return value_.get_d(); }

  // "p" when the denominator is one, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend Rational operator-(const Rational& x) {
    return Rational(mpq_class(-x.value_));
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

// Identifies the ordered field a value lives in: the rationals (d == 0) or
// the single quadratic extension Q(sqrt d) with d > 1 square-free.
struct FieldTag {
  std::int64_t d = 0;

  static FieldTag rationals() { return FieldTag{}; }
  // Throws FieldError unless d > 1 is square-free.
  static FieldTag quadratic(std::int64_t d);

  bool is_rational() const { return d == 0; }
  std::string str() const;

  friend bool operator==(FieldTag, FieldTag) = default;
};

bool is_square_free(std::int64_t d);

// a + b*sqrt(d).
struct QuadExtValue {
  Rational a;
  Rational b;
  std::int64_t d = 2;

  // Exact sign by case analysis on the signs of a and b, comparing a^2
  // against b^2 d only when the two parts disagree in sign.
  int sign() const;
};

// A scalar of an ordered field: either a rational or an element of a
// quadratic extension. Arithmetic never promotes between tags; mixing values
// with different tags throws FieldError.
class FieldValue {
 public:
  FieldValue() = default;
  FieldValue(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  FieldValue(Rational value) : a_(std::move(value)) {}  // NOLINT
  explicit FieldValue(const QuadExtValue& q);

  static FieldValue zero(FieldTag tag);
  static FieldValue one(FieldTag tag) { return from_int(tag, 1); }
  static FieldValue from_int(FieldTag tag, long value);
  static FieldValue from_rational(FieldTag tag, Rational value);

  // "p", "p/q", or "p/q+r/s*sqrt(d)" (also with '-' before the radical
  // part). Round-trips with str().
  static FieldValue parse(std::string_view text);

  FieldTag tag() const { return FieldTag{d_}; }
  bool is_rational() const { return d_ == 0; }
  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  // Throws FieldError for quadratic-extension values.
  const Rational& as_rational() const;
  QuadExtValue quad() const { return QuadExtValue{a_, b_, d_}; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  FieldValue abs() const { return sign() < 0 ? -*this : *this; }
  FieldValue inverse() const;
  double to_double() const;
  std::string str() const;

  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator/=(const FieldValue& o);

  friend FieldValue operator+(FieldValue x, const FieldValue& y) {
    return x += y;
  }
  friend FieldValue operator-(FieldValue x, const FieldValue& y) {
    return x -= y;
  }
  friend FieldValue operator*(FieldValue x, const FieldValue& y) {
    return x *= y;
  }
  friend FieldValue operator/(FieldValue x, const FieldValue& y) {
    return x /= y;
  }
  friend FieldValue operator-(const FieldValue& x);

  // Values of different fields compare unequal.
  friend bool operator==(const FieldValue& x, const FieldValue& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Throws FieldError on a tag mismatch.
  friend std::strong_ordering operator<=>(const FieldValue& x,
                                          const FieldValue& y);

 private:
  void check_same_field(const FieldValue& o) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

// Total order of the field; cmp(x, y) is the sign of x - y.
std::strong_ordering cmp(const FieldValue& x, const FieldValue& y);

}  // namespace hyparr

#endif  // HYPARR_FIELD_HPP_
