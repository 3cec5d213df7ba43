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

#ifndef HYPARR_CYCLES_HPP_
#define HYPARR_CYCLES_HPP_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hyparr/sphere.hpp"

namespace hyparr {

// A cyclic order on a set of 0-based labels, stored rotated so that the
// smallest label comes first.
class LineCycle {
 public:
  LineCycle() = default;
  // Throws InvalidObjectError on repeated labels.
  explicit LineCycle(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  LineCycle inverse() const;
  // Relabels every entry x as pi[x]. Throws InvalidObjectError if pi does not
  // cover a label (index out of range or negative image).
  LineCycle conjugate(const std::vector<int>& pi) const;
  // Keeps only the labels with keep[x] true, in cyclic order.
  LineCycle restrict(const std::vector<bool>& keep) const;

  // "(2 4 6 5 3)", 1-based.
  std::string str() const;
  // Accepts "(2 4 6 5 3)" or, for single-digit labels, "(24653)".
  static LineCycle parse(std::string_view text);

  friend auto operator<=>(const LineCycle&, const LineCycle&) = default;

 private:
  std::vector<int> labels_;
};

// Index of a cycle: projection set A (sorted), point j outside A, sign.
struct CycleKey {
  std::vector<int> a;
  int j = 0;
  int sign = 1;

  // Orders by subset, then point, then + before -.
  friend auto operator<=>(const CycleKey& x, const CycleKey& y) {
    return std::tie(x.a, x.j, y.sign) <=> std::tie(y.a, y.j, x.sign);
  }
  friend bool operator==(const CycleKey&, const CycleKey&) = default;
};

using CycleInvariantSet = std::map<CycleKey, LineCycle>;

// Cyclic order of the other lines around +P_i (sign = +1) or -P_i (sign = -1)
// on a 2-sphere arrangement. The lines are projected into the frame (e, f) of
// P_i^perp with det(P_i, e, f) > 0, folded into the upper half-plane and
// listed by increasing angle; the cycle at -P_i is the inverse.
LineCycle line_cycle(const AntipodalArrangement& arr, int i, int sign);

// Both cycles at every point of every projection along a (k-2)-subset.
CycleInvariantSet all_cycle_invariants(const AntipodalArrangement& arr,
                                       int jobs = 1);

// "[] 1 + (2 4 6 5 3)" per line, 1-based, in key order.
std::string format_key(const CycleKey& key);
std::string to_text(const CycleInvariantSet& set);

}  // namespace hyparr

#endif  // HYPARR_CYCLES_HPP_
