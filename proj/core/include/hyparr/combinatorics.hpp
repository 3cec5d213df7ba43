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

#ifndef HYPARR_COMBINATORICS_HPP_
#define HYPARR_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

namespace hyparr {

// All r-subsets of {0, ..., n-1} as ascending index vectors, in
// lexicographic order.
std::vector<std::vector<int>> combinations(int n, int r);

// Binomial coefficient; zero when r < 0 or r > n.
std::int64_t binomial(int n, int r);

// Sign of the permutation that sorts `v` (entries distinct).
int sort_sign(const std::vector<int>& v);

// Composition helpers for permutations stored as images of 0..n-1.
std::vector<int> invert_permutation(const std::vector<int>& p);

}  // namespace hyparr

#endif  // HYPARR_COMBINATORICS_HPP_
