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

#include "hyparr/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hyparr/combinatorics.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/io.hpp"

namespace hyparr {
namespace {

struct FixtureFile {
  const char* id;
  const char* file;
  PaperFixture::Kind kind;
};

constexpr FixtureFile kFixtures[] = {
    {"U1", "U1.json", PaperFixture::Kind::kNormalSystem},
    {"U2", "U2.json", PaperFixture::Kind::kNormalSystem},
    {"S4-standard", "S4.json", PaperFixture::Kind::kSphereArrangement},
    {"U1-equations", "U1-equations.json", PaperFixture::Kind::kEquations},
    {"U2-equations", "U2-equations.json", PaperFixture::Kind::kEquations},
    {"U1-cycles", "U1-cycles.json", PaperFixture::Kind::kCycles},
    {"U2-cycles", "U2-cycles.json", PaperFixture::Kind::kCycles},
    {"S4-dictionary", "S4-dictionary.json", PaperFixture::Kind::kCycles},
    {"S4-symbols", "S4-symbols.json", PaperFixture::Kind::kSymbols},
};

const FixtureFile& find_file(const std::string& id) {
  for (const auto& f : kFixtures) {
    if (id == f.id) return f;
  }
  throw InvalidObjectError("unknown fixture: " + id);
}

int parse_sign(const Json& j) {
  const std::string s = j.get<std::string>();
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw ParseError("bad sign: " + s);
}

std::vector<std::pair<long, int>> parse_terms(const Json& j) {
  std::vector<std::pair<long, int>> out;
  for (const auto& t : j) {
    out.emplace_back(t.at(0).get<long>(), t.at(1).get<int>() - 1);
  }
  return out;
}

Vector side_value(const NormalSystem& ns,
                  const std::vector<std::pair<long, int>>& terms) {
  Vector sum(ns.m, FieldValue::zero(ns.vectors.front().front().tag()));
  for (const auto& [c, idx] : terms) {
    if (idx < 0 || idx >= static_cast<int>(ns.vectors.size())) {
      throw InvalidObjectError("equation label out of range");
    }
    sum = add(sum, scale(ns.vectors[idx], FieldValue(Rational(c))));
  }
  return sum;
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ")";
  return os.str();
}

std::string entry_name(const CycleEntry& e) {
  return std::to_string(e.point + 1) + (e.sign > 0 ? "+" : "-");
}

void verify_equations(const PaperFixture& fx, FixtureReport* report) {
  const NormalSystem ns = load_fixture(fx.system).normal_system;
  std::set<std::vector<int>> supports;
  int index = 0;
  for (const auto& eq : fx.equations) {
    ++index;
    ++report->checked;
    const Vector l = side_value(ns, eq.lhs);
    const Vector r = side_value(ns, eq.rhs);
    if (l != r) {
      report->diffs.push_back("equation " + std::to_string(index) + ": lhs " +
                              vec_str(l) + " != rhs " + vec_str(r));
      continue;
    }
    if (l != eq.value) {
      report->diffs.push_back("equation " + std::to_string(index) + ": value " +
                              vec_str(l) + ", listed " + vec_str(eq.value));
    }
    std::vector<int> support;
    for (const auto& t : eq.lhs) support.push_back(t.second);
    for (const auto& t : eq.rhs) support.push_back(t.second);
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
      report->diffs.push_back("equation " + std::to_string(index) +
                              ": repeated label");
    }
    supports.insert(support);
  }
  const int n = static_cast<int>(ns.vectors.size());
  for (const auto& s : combinations(n, ns.m + 1)) {
    if (!supports.count(s)) {
      report->diffs.push_back("no equation on labels " + subset_key(s));
    }
  }
}

void verify_cycles(const PaperFixture& fx, FixtureReport* report) {
  const PaperFixture data = load_fixture(fx.system);
  const AntipodalArrangement arr =
      data.kind == PaperFixture::Kind::kNormalSystem
          ? to_arrangement(data.normal_system)
          : data.arrangement;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : fx.cycles) {
    ++report->checked;
    seen.emplace(e.point, e.sign);
    const LineCycle got = line_cycle(arr, e.point, e.sign);
    if (got != e.cycle) {
      report->diffs.push_back(entry_name(e) + ": computed " + got.str() +
                              ", listed " + e.cycle.str());
    }
  }
  if (fx.id != "S4-dictionary") {
    for (int i = 0; i < arr.size(); ++i) {
      for (int s : {1, -1}) {
        if (!seen.count({i, s})) {
          report->diffs.push_back(
              "missing " + entry_name(CycleEntry{i, s, LineCycle()}));
        }
      }
    }
  }
}

void verify_symbols(const PaperFixture& fx, FixtureReport* report) {
  const AntipodalArrangement arr = load_fixture(fx.system).arrangement;
  const std::vector<Symbol> computed = compatible_symbols(arr);
  std::vector<Symbol> listed = fx.symbols;
  std::sort(listed.begin(), listed.end());
  report->checked = static_cast<int>(listed.size());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) {
    report->diffs.push_back("listed symbols repeat");
  }
  for (const auto& s : computed) {
    if (!std::binary_search(listed.begin(), listed.end(), s)) {
      report->diffs.push_back("missing " + s.str());
    }
  }
  for (const auto& s : listed) {
    if (!std::binary_search(computed.begin(), computed.end(), s)) {
      report->diffs.push_back("not compatible: " + s.str());
    }
  }
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("HYPARR_FIXTURES"); env && *env) {
    return env;
  }
  if (std::filesystem::is_directory(HYPARR_FIXTURE_DIR)) {
    return HYPARR_FIXTURE_DIR;
  }
  return HYPARR_INSTALLED_FIXTURE_DIR;
}

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : kFixtures) ids.emplace_back(f.id);
  return ids;
}

std::vector<std::string> verifiable_fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : kFixtures) {
    if (f.kind != PaperFixture::Kind::kNormalSystem &&
        f.kind != PaperFixture::Kind::kSphereArrangement) {
      ids.emplace_back(f.id);
    }
  }
  return ids;
}

PaperFixture load_fixture(const std::string& id) {
  const FixtureFile& f = find_file(id);
  const Json j =
      load_json_file((std::filesystem::path(fixture_dir()) / f.file).string());
  PaperFixture fx;
  fx.id = id;
  fx.kind = f.kind;
  try {
    switch (f.kind) {
      case PaperFixture::Kind::kNormalSystem:
        fx.normal_system = normal_system_from_json(j);
        break;
      case PaperFixture::Kind::kSphereArrangement:
        fx.arrangement = sphere_arrangement_from_json(j);
        break;
      case PaperFixture::Kind::kEquations:
        fx.system = j.at("system").get<std::string>();
        for (const auto& e : j.at("equations")) {
          fx.equations.push_back(Equation{parse_terms(e.at("lhs")),
                                          parse_terms(e.at("rhs")),
                                          vector_from_json(e.at("value"))});
        }
        break;
      case PaperFixture::Kind::kCycles:
        fx.system = j.at("system").get<std::string>();
        for (const auto& e : j.at("cycles")) {
          fx.cycles.push_back(
              CycleEntry{e.at("point").get<int>() - 1, parse_sign(e.at("sign")),
                         LineCycle::parse(e.at("cycle").get<std::string>())});
        }
        break;
      case PaperFixture::Kind::kSymbols:
        fx.system = j.at("system").get<std::string>();
        for (const auto& s : j.at("symbols")) {
          fx.symbols.push_back(Symbol::parse(s.get<std::string>()));
        }
        break;
    }
  } catch (const Json::exception& e) {
    throw ParseError("fixture " + id + ": " + e.what());
  }
  return fx;
}

FixtureReport verify_fixture(const std::string& id) {
  const PaperFixture fx = load_fixture(id);
  FixtureReport report;
  report.id = id;
  switch (fx.kind) {
    case PaperFixture::Kind::kNormalSystem: {
      report.checked = 1;
      const auto d = validate_normal_system(fx.normal_system);
      if (!d.valid) report.diffs.push_back("invalid: " + d.reason);
      break;
    }
    case PaperFixture::Kind::kSphereArrangement: {
      report.checked = 1;
      const auto d = validate_arrangement(fx.arrangement);
      if (!d.valid) report.diffs.push_back("invalid: " + d.reason);
      break;
    }
    case PaperFixture::Kind::kEquations:
      verify_equations(fx, &report);
      break;
    case PaperFixture::Kind::kCycles:
      verify_cycles(fx, &report);
      break;
    case PaperFixture::Kind::kSymbols:
      verify_symbols(fx, &report);
      break;
  }
  return report;
}

SignedPair make_signed_pair(std::pair<int, int> a, std::pair<int, int> b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

CompatiblePairGraph compatible_pair_graph(const std::vector<Equation>& equations) {
  CompatiblePairGraph graph;
  for (const auto& eq : equations) {
    // Relation sum alpha_i u_i = 0 with lhs terms positive, rhs negative.
    std::vector<std::pair<int, int>> alpha;
    for (const auto& [c, i] : eq.lhs) alpha.emplace_back(i, c > 0 ? 1 : -1);
    for (const auto& [c, i] : eq.rhs) alpha.emplace_back(i, c > 0 ? -1 : 1);
    if (alpha.size() != 4) {
      throw InvalidObjectError("pair graph needs four-term relations");
    }
    // The three splits {0,x} | rest.
    for (int x = 1; x < 4; ++x) {
      std::vector<int> rest;
      for (int y = 1; y < 4; ++y) {
        if (y != x) rest.push_back(y);
      }
      for (int s : {1, -1}) {
        auto term = [&](int idx, int sign) {
          return std::make_pair(alpha[idx].first, sign * alpha[idx].second);
        };
        const SignedPair v1 = make_signed_pair(term(0, s), term(x, s));
        const SignedPair v2 =
            make_signed_pair(term(rest[0], -s), term(rest[1], -s));
        graph[v1].insert(v2);
        graph[v2].insert(v1);
      }
    }
  }
  return graph;
}

}  // namespace hyparr
