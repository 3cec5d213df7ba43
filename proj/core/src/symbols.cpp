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


#include "hyparr/symbols.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <regex>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

NormalSystem as_normal_system(const AntipodalArrangement& arr) {
  NormalSystem ns;
  ns.m = arr.k + 1;
  for (const auto& p : arr.points) ns.vectors.push_back(p.rep());
  return ns;
}

void require_four_pairs(const AntipodalArrangement& arr) {
  if (arr.k != 2 || arr.size() != 4) {
    throw DimensionError("expected 4 antipodal pairs on the 2-sphere");
  }
  const auto d = validate_arrangement(arr);
  if (!d.valid) throw InvalidObjectError("invalid arrangement: " + d.reason);
}

Vector instantiate(int label, const std::vector<Vector>& reps) {
  Vector v = reps[std::abs(label) - 1];
  if (label < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

// Sign of det(triple) if the head is a positive combination of the triple,
// zero otherwise.
int compatibility(const Symbol& s, const std::vector<Vector>& reps) {
  std::vector<Vector> triple;
  for (int t : s.triple) triple.push_back(instantiate(t, reps));
  const int d = det(Matrix::from_rows(triple)).sign();
  if (d == 0) return 0;
  const auto pc = positive_combination(instantiate(s.head, reps), triple);
  return pc.is_positive() ? d : 0;
}

std::string word_key(const Symbol& s) { return s.str(); }

}  // namespace

std::string Symbol::str() const {
  return std::to_string(head) + "->(" + std::to_string(triple[0]) + "," +
         std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")";
}

Symbol Symbol::parse(std::string_view text) {
  static const std::regex re(
      R"(^\s*([+-]?\d)\s*->\s*\(\s*([+-]?\d)\s*,\s*([+-]?\d)\s*,\s*([+-]?\d)\s*\)\s*$)");
  const std::string str(text);
  std::smatch m;
  if (!std::regex_match(str, m, re)) throw ParseError("not a symbol: '" + str + "'");
  Symbol s{std::stoi(m[1].str()),
           {std::stoi(m[2].str()), std::stoi(m[3].str()), std::stoi(m[4].str())}};
  if (!is_valid_symbol(s)) throw ParseError("invalid symbol: '" + str + "'");
  return s;
}

bool is_valid_symbol(const Symbol& s) {
  std::array<int, 4> lines = {std::abs(s.head), std::abs(s.triple[0]),
                              std::abs(s.triple[1]), std::abs(s.triple[2])};
  std::sort(lines.begin(), lines.end());
  return lines == std::array<int, 4>{1, 2, 3, 4};
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::k12: return "(12)";
    case Generator::k23: return "(23)";
    case Generator::k34: return "(34)";
    case Generator::k14: return "(14)";
  }
  return "?";
}

Symbol act(Generator g, const Symbol& s) {
  const int p = s.head;
  const auto [q, r, t] = s.triple;
  switch (g) {
    case Generator::k12: return {-p, {-r, -q, -t}};
    case Generator::k23: return {r, {-q, p, -t}};
    case Generator::k34: return {t, {-q, -r, p}};
    case Generator::k14: return {-p, {-t, -r, -q}};
  }
  return s;
}

Symbol act(const S4Element& g, const Symbol& s) {
  Symbol out = s;
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) out = act(*it, out);
  return out;
}

const std::vector<S4Element>& s4_elements() {
  // The action is free, so an element is determined by where it sends one
  // symbol; breadth-first search yields shortest words.
  static const std::vector<S4Element> elements = [] {
    const Symbol base;
    std::vector<S4Element> out{S4Element{}};
    std::map<std::string, std::size_t> seen{{word_key(base), 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const S4Element cur = out[queue.front()];
      queue.pop_front();
      for (Generator g : kGenerators) {
        S4Element next;
        next.word.push_back(g);
        next.word.insert(next.word.end(), cur.word.begin(), cur.word.end());
        const std::string key = word_key(act(next, base));
        if (seen.count(key)) continue;
        seen[key] = out.size();
        queue.push_back(out.size());
        out.push_back(std::move(next));
      }
    }
    return out;
  }();
  return elements;
}

std::vector<Symbol> all_symbols() {
  std::vector<Symbol> out;
  for (int head = 1; head <= 4; ++head) {
    std::vector<int> rest;
    for (int x = 1; x <= 4; ++x) {
      if (x != head) rest.push_back(x);
    }
    do {
      for (int bits = 0; bits < 16; ++bits) {
        auto sg = [&](int b) { return (bits >> b) & 1 ? -1 : 1; };
        out.push_back(Symbol{sg(0) * head,
                             {sg(1) * rest[0], sg(2) * rest[1], sg(3) * rest[2]}});
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Symbol> orbit(const Symbol& s) {
  std::set<Symbol> seen{s};
  std::vector<Symbol> stack{s};
  while (!stack.empty()) {
    const Symbol x = stack.back();
    stack.pop_back();
    for (Generator g : kGenerators) {
      const Symbol y = act(g, x);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

std::vector<std::set<Symbol>> orbits() {
  std::vector<std::set<Symbol>> out;
  std::set<Symbol> covered;
  for (const auto& s : all_symbols()) {
    if (covered.count(s)) continue;
    auto o = orbit(s);
    covered.insert(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

AntipodalArrangement standard_s4() {
  AntipodalArrangement arr;
  arr.k = 2;
  const std::vector<Vector> reps = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (const auto& v : reps) arr.points.push_back(SpherePoint::canonicalize(v));
  return arr;
}

std::vector<Symbol> compatible_symbols(const AntipodalArrangement& arr) {
  require_four_pairs(arr);
  std::vector<Vector> reps;
  for (const auto& p : arr.points) reps.push_back(p.rep());
  std::vector<Symbol> out;
  for (const auto& s : all_symbols()) {
    if (compatibility(s, reps) < 0) out.push_back(s);
  }
  return out;
}

int canonical_triple_sign(const Symbol& s) {
  if (!is_valid_symbol(s)) throw InvalidObjectError("invalid symbol " + s.str());
  std::vector<Vector> reps = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (int bits = 0; bits < 8; ++bits) {
    for (int c = 0; c < 3; ++c) reps[3][c] = (bits >> c) & 1 ? -1 : 1;
    const int sign = compatibility(s, reps);
    if (sign != 0) return sign;
  }
  throw InvalidObjectError("no octant realizes " + s.str());
}

std::vector<IsoWitness> match_to_standard(const CycleInvariantSet& cycles) {
  std::vector<LineCycle> plus(4);
  for (int j = 0; j < 4; ++j) {
    const auto it = cycles.find(CycleKey{{}, j, 1});
    if (it == cycles.end()) throw InvalidObjectError("missing line cycle");
    plus[j] = it->second;
  }
  const AntipodalArrangement std_arr = standard_s4();
  std::vector<LineCycle> dict(4);
  for (int j = 0; j < 4; ++j) dict[j] = line_cycle(std_arr, j, 1);

  std::vector<IsoWitness> out;
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int bits = 0; bits < 16; ++bits) {
      std::vector<int> signs(4);
      for (int i = 0; i < 4; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
      for (int s : {1, -1}) {
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) {
          LineCycle lhs = dict[perm[j]];
          if (signs[j] < 0) lhs = lhs.inverse();
          LineCycle rhs = plus[j].conjugate(perm);
          if (s < 0) rhs = rhs.inverse();
          ok = lhs == rhs;
        }
        if (ok) out.push_back(IsoWitness{perm, signs, s < 0});
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (out.empty()) throw InvalidObjectError("cycles do not align with the standard dictionary");
  sort_witnesses(&out);
  return out;
}

std::vector<SignedBijection> automorphisms(const AntipodalArrangement& arr) {
  require_four_pairs(arr);
  const NormalSystem ns = as_normal_system(arr);
  std::vector<SignedBijection> out;
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int bits = 0; bits < 16; ++bits) {
      SignedBijection b{perm, std::vector<int>(4)};
      for (int i = 0; i < 4; ++i) b.signs[i] = (bits >> i) & 1 ? -1 : 1;
      if (is_convex_positive_bijection(b, ns, ns)) out.push_back(std::move(b));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const SignedBijection& x, const SignedBijection& y) {
    if (x.perm != y.perm) return x.perm < y.perm;
    return std::lexicographical_compare(x.signs.begin(), x.signs.end(),
                                        y.signs.begin(), y.signs.end(),
                                        [](int a, int b) { return a > b; });
  });
  return out;
}

}  // namespace hyparr
