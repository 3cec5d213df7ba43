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

#ifndef HYPARR_SYMBOLS_HPP_
#define HYPARR_SYMBOLS_HPP_

#include <array>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/cycles.hpp"
#include "hyparr/normal_systems.hpp"
#include "hyparr/sphere.hpp"

namespace hyparr {

// p -> (q, r, s) over the signed labels +-1..+-4, one entry per line.
struct Symbol {
  int head = 4;
  std::array<int, 3> triple = {2, 1, 3};

  // "4->(2,1,3)".
  std::string str() const;
  static Symbol parse(std::string_view text);

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

bool is_valid_symbol(const Symbol& s);

// The four generating transpositions acting on the positions of a symbol.
enum class Generator { k12, k23, k34, k14 };

inline constexpr std::array<Generator, 4> kGenerators = {
    Generator::k12, Generator::k23, Generator::k34, Generator::k14};

std::string generator_name(Generator g);
Symbol act(Generator g, const Symbol& s);

// An element of S4 written as a generator word; the rightmost letter acts
// first.
struct S4Element {
  std::vector<Generator> word;
};

// The 24 elements, each with a shortest word, identity first.
const std::vector<S4Element>& s4_elements();
Symbol act(const S4Element& g, const Symbol& s);

// All 384 symbols in ascending order.
std::vector<Symbol> all_symbols();
std::set<Symbol> orbit(const Symbol& s);
std::vector<std::set<Symbol>> orbits();

// x = e1, y = e2, z = e3, P = (1, 1, 1).
AntipodalArrangement standard_s4();

// Symbols whose head is a positive combination of their triple and whose
// triple has negative determinant, in ascending order. Needs n = 4, k = 2.
std::vector<Symbol> compatible_symbols(const AntipodalArrangement& arr);

// Instantiates labels 1, 2, 3 as e1, e2, e3 and label 4 as the octant point
// (+-1, +-1, +-1) that makes the head a positive combination of the triple,
// then returns the sign of the triple's determinant.
int canonical_triple_sign(const Symbol& s);

// Signed bijections carrying a 4-pair arrangement with the given line cycles
// onto the standard arrangement, sorted; the flipped ones invert every cycle.
// Throws InvalidObjectError when nothing aligns.
std::vector<IsoWitness> match_to_standard(const CycleInvariantSet& cycles);

// Convex positive self-bijections of a 4-pair arrangement, sorted by
// (perm, signs).
std::vector<SignedBijection> automorphisms(const AntipodalArrangement& arr);

}  // namespace hyparr

#endif  // HYPARR_SYMBOLS_HPP_
