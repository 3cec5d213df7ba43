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

#ifndef HYPARR_FOURIER_MOTZKIN_HPP_
#define HYPARR_FOURIER_MOTZKIN_HPP_

#include <cstddef>
#include <vector>

#include "hyparr/linalg.hpp"

namespace hyparr {

// coeffs . x >= rhs, or > rhs when strict.
struct LinearInequality {
  Vector coeffs;
  FieldValue rhs;
  bool strict = false;
};

struct FeasibilityResult {
  bool feasible = false;
  Vector point;  // a solution when feasible
};

// Exact Fourier-Motzkin elimination with Chernikov's redundancy rule. Strict
// rows are handled through the homogenized system
//   coeffs . z - rhs t >= 1 (strict),  coeffs . z - rhs t >= 0,  t >= 1,
// which is feasible exactly when the original system is, and the point is
// recovered as z / t.
FeasibilityResult fm_feasible(const std::vector<LinearInequality>& rows,
                              std::size_t dim, FieldTag tag = {});

}  // namespace hyparr

#endif  // HYPARR_FOURIER_MOTZKIN_HPP_
