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

#include "hyparr/io.hpp"

#include <gtest/gtest.h>

#include "hyparr/errors.hpp"
#include "hyparr/fixtures.hpp"

namespace hyparr {
namespace {

TEST(IoTest, DetectKind) {
  EXPECT_EQ(detect_kind(Json::parse(R"({"k":2,"points":[]})")),
            ObjectKind::kSphereArrangement);
  EXPECT_EQ(detect_kind(Json::parse(R"({"m":2,"vectors":[]})")),
            ObjectKind::kNormalSystem);
  EXPECT_EQ(detect_kind(Json::parse(R"({"m":2,"coeffs":[],"constants":[]})")),
            ObjectKind::kHyperplanes);
  EXPECT_THROW(detect_kind(Json::parse(R"({"x":1})")), ParseError);
  EXPECT_THROW(detect_kind(Json::parse("[1]")), ParseError);
}

TEST(IoTest, FieldValues) {
  EXPECT_EQ(field_from_json(Json("3/6")), FieldValue(Rational(1, 2)));
  EXPECT_EQ(field_from_json(Json(-4)), FieldValue(-4));
  EXPECT_THROW(field_from_json(Json(0.5)), ParseError);
}

TEST(IoTest, RoundTrips) {
  const NormalSystem u1 = load_fixture("U1").normal_system;
  EXPECT_EQ(normal_system_from_json(to_json(u1)).vectors, u1.vectors);

  const Json ha_json = Json::parse(
      R"({"m":2,"coeffs":[["1","1"],["-1","0"],["0","-1"]],"constants":["1","0","0"]})");
  const auto ha = hyperplanes_from_json(ha_json);
  EXPECT_EQ(to_json(ha), ha_json);

  const auto arr = load_fixture("S4-standard").arrangement;
  EXPECT_EQ(sphere_arrangement_from_json(to_json(arr)).points, arr.points);
}

TEST(IoTest, Serializations) {
  EXPECT_EQ(to_json(ConcurrencySignMap{{{0, 1, 2}, 1}, {{0, 1, 3}, -1}}).dump(),
            R"({"1,2,3":1,"1,2,4":-1})");
  const IsoWitness w{{1, 0}, {1, -1}, true};
  EXPECT_EQ(to_json(w).dump(), R"({"perm":[2,1],"signs":[1,-1],"flipped":true})");
  EXPECT_EQ(subset_key({0, 4}), "1,5");
}

TEST(IoTest, RationalsJoinTheFileField) {
  const auto ha = hyperplanes_from_json(Json::parse(
      R"j({"m":2,"coeffs":[["1","0+1*sqrt(2)"],["0","1"]],"constants":["0","1"]})j"));
  const FieldTag q2 = FieldTag::quadratic(2);
  for (const auto& row : ha.coeffs) {
    for (const auto& x : row) EXPECT_EQ(x.tag(), q2);
  }
  EXPECT_EQ(ha.constants[1], FieldValue::one(q2));

  const auto ns = normal_system_from_json(
      Json::parse(R"j({"m":2,"vectors":[["1","0"],["0","1"]]})j"));
  EXPECT_TRUE(ns.vectors[0][0].is_rational());

  EXPECT_THROW(normal_system_from_json(Json::parse(
                   R"j({"m":2,"vectors":[["0+1*sqrt(2)","0"],["0","0+1*sqrt(3)"]]})j")),
               FieldError);
}

TEST(IoTest, BadFiles) {
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), ParseError);
  EXPECT_THROW(normal_system_from_json(Json::parse(R"({"m":2,"vectors":[["1","x"]]})")),
               ParseError);
}

}  // namespace
}  // namespace hyparr
