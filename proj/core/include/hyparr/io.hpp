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

#ifndef HYPARR_IO_HPP_
#define HYPARR_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "hyparr/arrangements.hpp"
#include "hyparr/cycles.hpp"
#include "hyparr/normal_systems.hpp"
#include "hyparr/sphere.hpp"

namespace hyparr {

using Json = nlohmann::ordered_json;

enum class ObjectKind { kSphereArrangement, kNormalSystem, kHyperplanes };

// Throws ParseError when the file is unreadable or not JSON.
Json load_json_file(const std::string& path);

// {"k", "points"}, {"m", "vectors"} or {"m", "coeffs", "constants"}.
ObjectKind detect_kind(const Json& j);

FieldValue field_from_json(const Json& j);
Vector vector_from_json(const Json& j);

AntipodalArrangement sphere_arrangement_from_json(const Json& j);
NormalSystem normal_system_from_json(const Json& j);
HyperplaneArrangement hyperplanes_from_json(const Json& j);

Json to_json(const Vector& v);
Json to_json(const AntipodalArrangement& arr);
Json to_json(const NormalSystem& ns);
Json to_json(const HyperplaneArrangement& ha);
Json to_json(const CycleInvariantSet& cycles);
Json to_json(const ConcurrencySignMap& signs);
Json to_json(const IsoWitness& w);

// "1,2,3" for a 0-based subset.
std::string subset_key(const std::vector<int>& subset);

}  // namespace hyparr

#endif  // HYPARR_IO_HPP_
