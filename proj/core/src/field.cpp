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

#include <regex>
#include <string>
#include <utility>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

const std::regex& rational_pattern() {
  static const std::regex re(R"(^([+-]?\d+)(?:/(\d+))?$)");
  return re;
}

const std::regex& quad_pattern() {
  static const std::regex re(
      R"(^([+-]?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)\*sqrt\((\d+)\)$)");
  return re;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, rational_pattern())) {
    throw ParseError("not a rational: '" + s + "'");
  }
  std::string num = match[1].str();
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(1);
  if (match[2].matched) {
    d = mpz_class(match[2].str(), 10);
    if (d == 0) throw ParseError("zero denominator: '" + s + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw FieldError("division by zero");
  value_ /= o.value_;
  return *this;
}

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p <= d / p; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldTag FieldTag::quadratic(std::int64_t d) {
  if (d < 2 || !is_square_free(d)) {
    throw FieldError("extension radicand must be a square-free integer >= 2, got " +
                     std::to_string(d));
  }
  return FieldTag{d};
}

std::string FieldTag::str() const {
  return d == 0 ? "Q" : "Q(sqrt(" + std::to_string(d) + "))";
}

int QuadExtValue::sign() const {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa == 0 && sb == 0) return 0;
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa > 0 && sb > 0) return 1;
  if (sa < 0 && sb < 0) return -1;
  const Rational a2 = a * a;
  const Rational b2d = b * b * Rational(static_cast<long>(d));
  if (sa > 0) return a2 > b2d ? 1 : -1;  // a > 0, b < 0
  return b2d > a2 ? 1 : -1;              // a < 0, b > 0
}

FieldValue::FieldValue(const QuadExtValue& q) : a_(q.a), b_(q.b), d_(q.d) {
  FieldTag::quadratic(q.d);
}

FieldValue FieldValue::zero(FieldTag tag) { return from_int(tag, 0); }

FieldValue FieldValue::from_int(FieldTag tag, long value) {
  return from_rational(tag, Rational(value));
}

FieldValue FieldValue::from_rational(FieldTag tag, Rational value) {
  FieldValue x(std::move(value));
  x.d_ = tag.d;
  return x;
}

FieldValue FieldValue::parse(std::string_view text) {
  const std::string s(text);
  if (s.find("sqrt") == std::string::npos) return FieldValue(Rational::parse(s));
  std::smatch match;
  if (!std::regex_match(s, match, quad_pattern())) {
    throw ParseError("not a field value: '" + s + "'");
  }
  Rational a = Rational::parse(match[1].str());
  Rational b = Rational::parse(match[3].str());
  if (match[2].str() == "-") b = -b;
  std::int64_t d = 0;
  try {
    d = std::stoll(match[4].str());
  } catch (const std::exception&) {
    throw ParseError("radicand out of range: '" + s + "'");
  }
  if (d < 2 || !is_square_free(d)) {
    throw ParseError("radicand must be square-free and >= 2: '" + s + "'");
  }
  return FieldValue(QuadExtValue{std::move(a), std::move(b), d});
}

const Rational& FieldValue::as_rational() const {
  if (d_ != 0) throw FieldError("value is not rational: " + str());
  return a_;
}

int FieldValue::sign() const {
  if (d_ == 0) return a_.sign();
  return QuadExtValue{a_, b_, d_}.sign();
}

FieldValue FieldValue::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (d_ == 0) return from_rational(tag(), Rational(1) / a_);
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
  // because sqrt d is irrational.
  const Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_));
  FieldValue r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  return r;
}

double FieldValue::to_double() const {
  if (d_ == 0) return a_.to_double();
  mpf_class root(static_cast<double>(d_), 128);
  root = sqrt(root);
  mpf_class v(a_.value(), 128);
  v += mpf_class(b_.value(), 128) * root;
  return v.get_d();
}

std::string FieldValue::str() const {
  if (d_ == 0) return a_.str();
  std::string s = a_.str();
  s += b_.sign() < 0 ? "-" : "+";
  s += b_.abs().str();
  s += "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

void FieldValue::check_same_field(const FieldValue& o) const {
  if (d_ != o.d_) {
    throw FieldError("field mismatch: " + tag().str() + " vs " + o.tag().str());
  }
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  check_same_field(o);
  if (d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(d_));
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& o) {
  check_same_field(o);
  if (o.is_zero()) throw FieldError("division by zero");
  if (d_ == 0) {
    a_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

FieldValue operator-(const FieldValue& x) {
  FieldValue r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::strong_ordering operator<=>(const FieldValue& x, const FieldValue& y) {
  return cmp(x, y);
}

std::strong_ordering cmp(const FieldValue& x, const FieldValue& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

}  // namespace hyparr
