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

#ifndef HYPARR_FIXTURES_HPP_
#define HYPARR_FIXTURES_HPP_

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/cycles.hpp"
#include "hyparr/normal_systems.hpp"
#include "hyparr/sphere.hpp"
#include "hyparr/symbols.hpp"

namespace hyparr {

// sum lhs = sum rhs = value; terms are (coefficient, 0-based label).
struct Equation {
  std::vector<std::pair<long, int>> lhs;
  std::vector<std::pair<long, int>> rhs;
  Vector value;
};

struct CycleEntry {
  int point = 0;  // 0-based
  int sign = 1;
  LineCycle cycle;
};

struct PaperFixture {
  enum class Kind { kNormalSystem, kSphereArrangement, kEquations, kCycles, kSymbols };

  std::string id;
  Kind kind = Kind::kNormalSystem;
  std::string system;  // data fixture a derived fixture refers to

  NormalSystem normal_system;
  AntipodalArrangement arrangement;
  std::vector<Equation> equations;
  std::vector<CycleEntry> cycles;
  std::vector<Symbol> symbols;
};

// HYPARR_FIXTURES if set, else the source tree, else the install prefix.
std::string fixture_dir();
std::vector<std::string> fixture_ids();
// Fixtures that verify_fixture recomputes from the data fixtures.
std::vector<std::string> verifiable_fixture_ids();

// Throws InvalidObjectError for unknown ids, ParseError for bad files.
PaperFixture load_fixture(const std::string& id);

struct FixtureReport {
  std::string id;
  int checked = 0;
  std::vector<std::string> diffs;

  bool ok() const { return diffs.empty(); }
};

FixtureReport verify_fixture(const std::string& id);

// Vertices are signed pairs {s_i u_i, s_j u_j} stored as sorted
// (label, sign) pairs. Each linear relation on four vectors with coefficient
// signs alpha links, for each split into two pairs and each global sign s,
// the pair carrying s*alpha to the other pair carrying -s*alpha.
using SignedPair = std::array<std::pair<int, int>, 2>;
using CompatiblePairGraph = std::map<SignedPair, std::set<SignedPair>>;

CompatiblePairGraph compatible_pair_graph(const std::vector<Equation>& equations);
SignedPair make_signed_pair(std::pair<int, int> a, std::pair<int, int> b);

}  // namespace hyparr

#endif  // HYPARR_FIXTURES_HPP_
