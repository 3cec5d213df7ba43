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

#include <fstream>
#include <sstream>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

std::vector<Vector> rows_from_json(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw ParseError(std::string("missing array field '") + field + "'");
  }
  std::vector<Vector> rows;
  for (const auto& r : j.at(field)) rows.push_back(vector_from_json(r));
  return rows;
}

int int_field(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + field + "'");
  }
  return j.at(field).get<int>();
}

// A file describes one computation, so all of its values live in one field:
// plain rationals are embedded into the single quadratic field named by the
// other entries. Two different radicands are rejected.
void unify_field(std::vector<Vector*> groups) {
  FieldTag tag;
  for (const Vector* v : groups) {
    for (const FieldValue& x : *v) {
      if (x.is_rational()) continue;
      if (!tag.is_rational() && x.tag() != tag) {
        throw FieldError("values from " + tag.str() + " and " + x.tag().str() +
                         " in one input");
      }
      tag = x.tag();
    }
  }
  if (tag.is_rational()) return;
  for (Vector* v : groups) {
    for (FieldValue& x : *v) {
      if (x.is_rational()) x = FieldValue::from_rational(tag, x.rational_part());
    }
  }
}

void unify_field(std::vector<Vector>& rows) {
  std::vector<Vector*> groups;
  for (auto& r : rows) groups.push_back(&r);
  unify_field(groups);
}

Json rows_to_json(const std::vector<Vector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ObjectKind detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("points")) return ObjectKind::kSphereArrangement;
  if (j.contains("coeffs")) return ObjectKind::kHyperplanes;
  if (j.contains("vectors")) return ObjectKind::kNormalSystem;
  throw ParseError("unrecognized object: expected points, vectors or coeffs");
}

FieldValue field_from_json(const Json& j) {
  if (j.is_string()) return FieldValue::parse(j.get<std::string>());
  if (j.is_number_integer()) return FieldValue(j.get<long>());
  throw ParseError("field values must be strings or integers");
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of field values");
  Vector v;
  for (const auto& x : j) v.push_back(field_from_json(x));
  return v;
}

AntipodalArrangement sphere_arrangement_from_json(const Json& j) {
  AntipodalArrangement arr;
  arr.k = int_field(j, "k");
  std::vector<Vector> points = rows_from_json(j, "points");
  unify_field(points);
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != arr.k + 1) {
      throw ParseError("point dimension must be k+1");
    }
    if (is_zero(p)) throw ParseError("zero point");
    arr.points.push_back(SpherePoint::canonicalize(p));
  }
  return arr;
}

NormalSystem normal_system_from_json(const Json& j) {
  NormalSystem ns;
  ns.m = int_field(j, "m");
  ns.vectors = rows_from_json(j, "vectors");
  unify_field(ns.vectors);
  return ns;
}

HyperplaneArrangement hyperplanes_from_json(const Json& j) {
  HyperplaneArrangement ha;
  ha.m = int_field(j, "m");
  ha.coeffs = rows_from_json(j, "coeffs");
  if (!j.contains("constants")) throw ParseError("missing field 'constants'");
  ha.constants = vector_from_json(j.at("constants"));
  std::vector<Vector*> groups;
  for (auto& r : ha.coeffs) groups.push_back(&r);
  groups.push_back(&ha.constants);
  unify_field(groups);
  return ha;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const AntipodalArrangement& arr) {
  std::vector<Vector> reps;
  for (const auto& p : arr.points) reps.push_back(p.rep());
  return Json{{"k", arr.k}, {"points", rows_to_json(reps)}};
}

Json to_json(const NormalSystem& ns) {
  return Json{{"m", ns.m}, {"vectors", rows_to_json(ns.vectors)}};
}

Json to_json(const HyperplaneArrangement& ha) {
  return Json{{"m", ha.m}, {"coeffs", rows_to_json(ha.coeffs)},
              {"constants", to_json(ha.constants)}};
}

Json to_json(const CycleInvariantSet& cycles) {
  Json out = Json::object();
  for (const auto& [key, cycle] : cycles) out[format_key(key)] = cycle.str();
  return out;
}

std::string subset_key(const std::vector<int>& subset) {
  std::string s;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(subset[i] + 1);
  }
  return s;
}

Json to_json(const ConcurrencySignMap& signs) {
  Json out = Json::object();
  for (const auto& [subset, sign] : signs) out[subset_key(subset)] = sign;
  return out;
}

Json to_json(const IsoWitness& w) {
  Json perm = Json::array();
  for (int x : w.perm) perm.push_back(x + 1);
  return Json{{"perm", perm}, {"signs", w.signs}, {"flipped", w.flipped}};
}

}  // namespace hyparr
