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

#ifndef HYPARR_NORMAL_SYSTEMS_HPP_
#define HYPARR_NORMAL_SYSTEMS_HPP_

#include <string>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/sphere.hpp"

namespace hyparr {

// n lines through the origin of F^m given by representative vectors; any
// min(m, n) of them are linearly independent.
struct NormalSystem {
  int m = 0;
  std::vector<Vector> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
};

struct NormalSystemDiagnosis {
  bool valid = true;
  std::vector<int> violating;  // 0-based labels
  std::string reason;
};

NormalSystemDiagnosis validate_normal_system(const NormalSystem& ns);

// The sphere view: the same vectors as points of the (m-1)-sphere.
AntipodalArrangement to_arrangement(const NormalSystem& ns);

// delta(v_i) = signs[i] * w_{perm[i]}.
struct SignedBijection {
  std::vector<int> perm;
  std::vector<int> signs;

  friend bool operator==(const SignedBijection&, const SignedBijection&) = default;
};

// A signed bijection together with whether it reverses orientation.
struct IsoWitness {
  std::vector<int> perm;
  std::vector<int> signs;
  bool flipped = false;

  SignedBijection bijection() const { return {perm, signs}; }
  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

// Lexicographic by (flipped, perm, signs with + before -).
bool witness_less(const IsoWitness& x, const IsoWitness& y);
void sort_witnesses(std::vector<IsoWitness>* ws);

// second o first: v_i -> s1[i] s2[p1[i]] v_{p2[p1[i]]}.
SignedBijection compose(const SignedBijection& first,
                        const SignedBijection& second);
SignedBijection invert(const SignedBijection& b);
SignedBijection identity_bijection(int n);

// Whether the image (rows signs[i] * w_{perm[i]}, i < m) of the first m
// vectors has determinant sign opposite to the first m vectors themselves.
// False when n < m.
bool orientation_flipped(const SignedBijection& b, const NormalSystem& ns1,
                         const NormalSystem& ns2);

// Compares, over every (m+1)-subset T and every l in T, the signs of the
// coefficients of v_l in the basis T \ {l} with those of the image. The
// flipped flag of w is not consulted.
bool is_convex_positive_bijection(const IsoWitness& w, const NormalSystem& ns1,
                                  const NormalSystem& ns2);
bool is_convex_positive_bijection(const SignedBijection& b,
                                  const NormalSystem& ns1,
                                  const NormalSystem& ns2);

struct SearchOptions {
  int jobs = 1;
};

// All witnesses of isomorphism, sorted. For m >= 3 and n > m the search
// matches line cycles of every projection; m = 2 aligns circular orders;
// n <= m is vacuous (every signed bijection qualifies).
std::vector<IsoWitness> find_isomorphisms(const NormalSystem& ns1,
                                          const NormalSystem& ns2,
                                          const SearchOptions& options = {});

// Exhaustive sign-pattern search over all signed bijections. n <= 7.
std::vector<IsoWitness> oracle_isomorphisms(const NormalSystem& ns1,
                                            const NormalSystem& ns2,
                                            const SearchOptions& options = {});

inline constexpr int kOracleMaxSize = 7;

}  // namespace hyparr

#endif  // HYPARR_NORMAL_SYSTEMS_HPP_
