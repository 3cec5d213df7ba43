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

// hyparr command-line interface.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyparr/arrangements.hpp"
#include "hyparr/cycles.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/fixtures.hpp"
#include "hyparr/io.hpp"
#include "hyparr/normal_systems.hpp"
#include "hyparr/symbols.hpp"

namespace {

using hyparr::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonIsomorphic = 3;

struct CliConfig {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "text";
  unsigned seed = 1;
  int jobs = 1;
  bool oracle = false;
};

// Raised when a parsed object fails its validity conditions.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string labels_str(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += (i ? " " : "") + std::to_string(labels[i] + 1);
  }
  return out;
}

std::string witness_str(const hyparr::IsoWitness& w) {
  std::string signs;
  for (std::size_t i = 0; i < w.signs.size(); ++i) {
    signs += (i ? " " : "") + std::string(w.signs[i] > 0 ? "+" : "-");
  }
  return "perm=(" + labels_str(w.perm) + ") signs=(" + signs + ")" +
         (w.flipped ? " flipped" : "");
}

Json load(const std::string& path) { return hyparr::load_json_file(path); }

hyparr::NormalSystem load_normal_system(const std::string& path) {
  const Json j = load(path);
  hyparr::NormalSystem ns;
  switch (hyparr::detect_kind(j)) {
    case hyparr::ObjectKind::kNormalSystem:
      ns = hyparr::normal_system_from_json(j);
      break;
    case hyparr::ObjectKind::kHyperplanes:
      ns = hyparr::normal_system_of(hyparr::hyperplanes_from_json(j));
      break;
    default:
      throw hyparr::ParseError(path + ": expected a normal system");
  }
  const auto d = hyparr::validate_normal_system(ns);
  if (!d.valid) {
    throw InvalidInput(path + ": " + d.reason + " [" +
                       labels_str(d.violating) + "]");
  }
  return ns;
}

hyparr::AntipodalArrangement load_sphere(const std::string& path) {
  const Json j = load(path);
  hyparr::AntipodalArrangement arr;
  switch (hyparr::detect_kind(j)) {
    case hyparr::ObjectKind::kSphereArrangement:
      arr = hyparr::sphere_arrangement_from_json(j);
      break;
    case hyparr::ObjectKind::kNormalSystem:
      arr = hyparr::to_arrangement(load_normal_system(path));
      break;
    case hyparr::ObjectKind::kHyperplanes:
      arr = hyparr::to_arrangement(
          hyparr::normal_system_of(hyparr::hyperplanes_from_json(j)));
      break;
  }
  const auto d = hyparr::validate_arrangement(arr);
  if (!d.valid) {
    throw InvalidInput(path + ": " + d.reason + " [" +
                       labels_str(d.violating) + "]");
  }
  return arr;
}

hyparr::HyperplaneArrangement load_hyperplanes(const std::string& path) {
  const Json j = load(path);
  if (hyparr::detect_kind(j) != hyparr::ObjectKind::kHyperplanes) {
    throw hyparr::ParseError(path + ": expected a hyperplane arrangement");
  }
  hyparr::HyperplaneArrangement ha = hyparr::hyperplanes_from_json(j);
  const auto d = hyparr::validate(ha);
  if (!d.valid) {
    throw InvalidInput(path + ": " + d.reason + " [" +
                       labels_str(d.violating) + "]");
  }
  return ha;
}

struct Result {
  int code = kExitOk;
  std::string text;
  Json json;
};

Result cmd_validate(const CliConfig& cfg) {
  const std::string& path = cfg.inputs.at(0);
  const Json j = load(path);
  Result r;
  std::string kind;
  std::vector<int> violating;
  std::string reason;
  bool valid = true;
  switch (hyparr::detect_kind(j)) {
    case hyparr::ObjectKind::kSphereArrangement: {
      kind = "sphere-arrangement";
      const auto d =
          hyparr::validate_arrangement(hyparr::sphere_arrangement_from_json(j));
      valid = d.valid, violating = d.violating, reason = d.reason;
      break;
    }
    case hyparr::ObjectKind::kNormalSystem: {
      kind = "normal-system";
      const auto d =
          hyparr::validate_normal_system(hyparr::normal_system_from_json(j));
      valid = d.valid, violating = d.violating, reason = d.reason;
      break;
    }
    case hyparr::ObjectKind::kHyperplanes: {
      kind = "hyperplanes";
      const auto d = hyparr::validate(hyparr::hyperplanes_from_json(j));
      valid = d.valid, violating = d.violating, reason = d.reason;
      break;
    }
  }
  r.code = valid ? kExitOk : kExitInvalid;
  r.json = {{"kind", kind}, {"valid", valid}};
  if (valid) {
    r.text = "valid " + kind + "\n";
  } else {
    Json labels = Json::array();
    for (int v : violating) labels.push_back(v + 1);
    r.json["violating"] = labels;
    r.json["reason"] = reason;
    r.text = "invalid " + kind + ": " + reason + " [" + labels_str(violating) +
             "]\n";
  }
  return r;
}

Result cmd_cycles(const CliConfig& cfg) {
  const auto arr = load_sphere(cfg.inputs.at(0));
  Result r;
  if (arr.k == 2 && arr.size() == 4) {
    // Small planar case: the full dictionary around every point.
    hyparr::CycleInvariantSet set;
    for (int i = 0; i < arr.size(); ++i) {
      for (int s : {1, -1}) set[{{}, i, s}] = hyparr::line_cycle(arr, i, s);
    }
    r.text = hyparr::to_text(set);
    r.json = hyparr::to_json(set);
    return r;
  }
  const auto set = hyparr::all_cycle_invariants(arr, cfg.jobs);
  r.text = hyparr::to_text(set);
  r.json = hyparr::to_json(set);
  return r;
}

Result iso_result(const std::vector<hyparr::IsoWitness>& ws) {
  Result r;
  Json list = Json::array();
  for (const auto& w : ws) list.push_back(hyparr::to_json(w));
  r.code = ws.empty() ? kExitNonIsomorphic : kExitOk;
  r.json = {{"verdict", ws.empty() ? "non-isomorphic" : "isomorphic"},
            {"witnesses", list}};
  r.text = ws.empty() ? "non-isomorphic\n" : "isomorphic\n";
  for (const auto& w : ws) r.text += witness_str(w) + "\n";
  return r;
}

Result cmd_ns_iso(const CliConfig& cfg) {
  const auto ns1 = load_normal_system(cfg.inputs.at(0));
  const auto ns2 = load_normal_system(cfg.inputs.at(1));
  const hyparr::SearchOptions opts{cfg.jobs};
  return iso_result(cfg.oracle ? hyparr::oracle_isomorphisms(ns1, ns2, opts)
                               : hyparr::find_isomorphisms(ns1, ns2, opts));
}

Result cmd_ha_iso(const CliConfig& cfg) {
  const auto ha1 = load_hyperplanes(cfg.inputs.at(0));
  const auto ha2 = load_hyperplanes(cfg.inputs.at(1));
  Result r;
  if (cfg.oracle) {
    std::vector<int> perm;
    const bool iso = hyparr::isomorphic_by_definition_search(ha1, ha2, &perm);
    r.code = iso ? kExitOk : kExitNonIsomorphic;
    r.json = {{"verdict", iso ? "isomorphic" : "non-isomorphic"}};
    r.text = iso ? "isomorphic\n" : "non-isomorphic\n";
    if (iso) {
      Json p = Json::array();
      for (int v : perm) p.push_back(v + 1);
      r.json["perm"] = p;
      r.text += "perm=(" + labels_str(perm) + ")\n";
    }
    return r;
  }
  const auto res =
      hyparr::arrangements_isomorphic(ha1, ha2, hyparr::SearchOptions{cfg.jobs});
  r.code = res.isomorphic ? kExitOk : kExitNonIsomorphic;
  r.json = {{"verdict", res.isomorphic ? "isomorphic" : "non-isomorphic"}};
  r.text = res.isomorphic ? "isomorphic\n" : "non-isomorphic\n";
  if (res.isomorphic) {
    r.json["witness"] = hyparr::to_json(res.witness);
    r.json["branch"] = std::string(1, res.branch);
    r.text += witness_str(res.witness) + " branch=" + res.branch + "\n";
  }
  return r;
}

Result cmd_regions(const CliConfig& cfg) {
  const auto ha = load_hyperplanes(cfg.inputs.at(0));
  const auto got = hyparr::region_counts(ha);
  const auto want = hyparr::expected_region_counts(ha.size(), ha.m);
  const bool ok = got == want;
  Result r;
  r.json = {{"total", got.total},
            {"bounded", got.bounded},
            {"unbounded", got.unbounded},
            {"formula", ok ? "OK" : "MISMATCH"}};
  r.text = "total=" + std::to_string(got.total) +
           " bounded=" + std::to_string(got.bounded) +
           " unbounded=" + std::to_string(got.unbounded) +
           " formula=" + (ok ? "OK" : "MISMATCH") + "\n";
  return r;
}

Result cmd_signs(const CliConfig& cfg) {
  const auto ha = load_hyperplanes(cfg.inputs.at(0));
  const auto map = hyparr::concurrency_sign_map(ha);
  Result r;
  r.json = hyparr::to_json(map);
  for (const auto& [subset, sign] : map) {
    r.text += hyparr::subset_key(subset) + " " + (sign > 0 ? "+" : "-") + "\n";
  }
  return r;
}

Result cmd_symbols(const CliConfig& cfg) {
  const auto arr = cfg.inputs.empty() ? hyparr::standard_s4()
                                      : load_sphere(cfg.inputs.at(0));
  if (arr.k != 2 || arr.size() != 4) {
    throw InvalidInput("symbols need four points on the 2-sphere");
  }
  Result r;
  r.json = Json::array();
  for (const auto& s : hyparr::compatible_symbols(arr)) {
    r.json.push_back(s.str());
    r.text += s.str() + "\n";
  }
  return r;
}

// Fixture verification plus a seeded relabeling check of each normal system.
Result cmd_verify_paper(const CliConfig& cfg) {
  Result r;
  const auto ids = hyparr::verifiable_fixture_ids();
  int passed = 0;
  Json reports = Json::array();
  for (const auto& id : ids) {
    const auto rep = hyparr::verify_fixture(id);
    if (rep.ok()) ++passed;
    reports.push_back({{"id", id}, {"checked", rep.checked}, {"diffs", rep.diffs}});
    r.text += id + ": " + (rep.ok() ? "ok" : "FAILED") + " (" +
              std::to_string(rep.checked) + " checked)\n";
    for (const auto& d : rep.diffs) r.text += "  " + d + "\n";
  }

  std::mt19937 rng(cfg.seed);
  bool relabel_ok = true;
  for (const char* id : {"U1", "U2"}) {
    const auto ns = hyparr::load_fixture(id).normal_system;
    const int n = static_cast<int>(ns.vectors.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    hyparr::NormalSystem image = ns;
    for (int i = 0; i < n; ++i) image.vectors[perm[i]] = ns.vectors[i];
    const auto ws =
        hyparr::find_isomorphisms(ns, image, hyparr::SearchOptions{cfg.jobs});
    const bool found = std::any_of(ws.begin(), ws.end(), [&](const auto& w) {
      return w.perm == perm &&
             std::all_of(w.signs.begin(), w.signs.end(),
                         [](int s) { return s > 0; });
    });
    relabel_ok = relabel_ok && found;
    r.text += std::string(id) + " relabeling: " + (found ? "ok" : "FAILED") + "\n";
  }
  const auto u1 = hyparr::load_fixture("U1").normal_system;
  const auto u2 = hyparr::load_fixture("U2").normal_system;
  const bool distinct =
      hyparr::find_isomorphisms(u1, u2, hyparr::SearchOptions{cfg.jobs}).empty();
  r.text += std::string("U1 vs U2: ") +
            (distinct ? "non-isomorphic" : "ISOMORPHIC") + "\n";

  const std::string summary = "fixtures: " + std::to_string(passed) + "/" +
                              std::to_string(ids.size()) + " verified";
  r.text += summary + "\n";
  const bool all = passed == static_cast<int>(ids.size()) && relabel_ok &&
                   distinct;
  r.code = all ? kExitOk : kExitInvalid;
  r.json = {{"fixtures", reports},
            {"relabeling", relabel_ok},
            {"u1_u2_isomorphic", !distinct},
            {"summary", summary}};
  return r;
}

int emit(const CliConfig& cfg, const Result& r) {
  const std::string body =
      cfg.format == "json" ? r.json.dump(2) + "\n" : r.text;
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return kExitUsage;
    }
    out << body;
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and isomorphism tests for hyperplane arrangements"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Write output to PATH");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--oracle", cfg.oracle, "Use the exhaustive search");

  using Handler = Result (*)(const CliConfig&);
  struct Command {
    const char* name;
    const char* help;
    int min_args;
    int max_args;
    Handler run;
  };
  const Command commands[] = {
      {"validate", "Check validity of an input file", 1, 1, cmd_validate},
      {"cycles", "Print the line-cycle invariants", 1, 1, cmd_cycles},
      {"ns-iso", "Decide isomorphism of two normal systems", 2, 2, cmd_ns_iso},
      {"ha-iso", "Decide isomorphism of two hyperplane arrangements", 2, 2,
       cmd_ha_iso},
      {"regions", "Count regions and compare with the closed form", 1, 1,
       cmd_regions},
      {"signs", "Print the concurrency sign map", 1, 1, cmd_signs},
      {"symbols", "List compatible symbols (default: standard S4)", 0, 1,
       cmd_symbols},
      {"verify-paper", "Recompute every bundled fixture", 0, 0,
       cmd_verify_paper},
  };
  // Global flags are accepted after the subcommand as well.
  app.fallthrough();
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.max_args > 0) {
      auto* opt = sub->add_option("files", cfg.inputs, "Input files");
      opt->expected(c.min_args, c.max_args);
      if (c.min_args > 0) opt->required();
    }
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, run] : subs) {
    if (!sub->parsed()) continue;
    try {
      return emit(cfg, run(cfg));
    } catch (const InvalidInput& e) {
      std::cerr << "invalid: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const hyparr::ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const hyparr::FieldError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const hyparr::Error& e) {
      std::cerr << "invalid: " << e.what() << "\n";
      return kExitInvalid;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}
