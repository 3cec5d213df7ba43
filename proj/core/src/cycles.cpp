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


#include "hyparr/cycles.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "hyparr/combinatorics.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/parallel.hpp"

namespace hyparr {
namespace {

struct Dir {
  FieldValue x;
  FieldValue y;
};

FieldValue cross(const Dir& u, const Dir& w) { return u.x * w.y - u.y * w.x; }

}  // namespace

LineCycle::LineCycle(std::vector<int> labels) : labels_(std::move(labels)) {
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidObjectError("cycle repeats a label");
  }
  if (!labels_.empty()) {
    auto lo = std::min_element(labels_.begin(), labels_.end());
    std::rotate(labels_.begin(), lo, labels_.end());
  }
}

LineCycle LineCycle::inverse() const {
  std::vector<int> r(labels_.rbegin(), labels_.rend());
  return LineCycle(std::move(r));
}

LineCycle LineCycle::conjugate(const std::vector<int>& pi) const {
  std::vector<int> r;
  r.reserve(labels_.size());
  for (int x : labels_) {
    if (x < 0 || x >= static_cast<int>(pi.size()) || pi[x] < 0) {
      throw InvalidObjectError("permutation does not cover cycle label " +
                               std::to_string(x + 1));
    }
    r.push_back(pi[x]);
  }
  return LineCycle(std::move(r));
}

LineCycle LineCycle::restrict(const std::vector<bool>& keep) const {
  std::vector<int> r;
  for (int x : labels_) {
    if (x < static_cast<int>(keep.size()) && keep[x]) r.push_back(x);
  }
  return LineCycle(std::move(r));
}

std::string LineCycle::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(labels_[i] + 1);
  }
  return s + ")";
}

LineCycle LineCycle::parse(std::string_view text) {
  std::string body(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw ParseError("cycle must be parenthesized: '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<int> labels;
  const bool spaced = body.find(' ') != std::string::npos;
  if (spaced) {
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("bad cycle entry '" + tok + "'");
      }
      labels.push_back(std::stoi(tok) - 1);
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("bad cycle entry '" + std::string(1, c) + "'");
      }
      labels.push_back(c - '1');
    }
  }
  for (int x : labels) {
    if (x < 0) throw ParseError("cycle labels are 1-based");
  }
  try {
    return LineCycle(std::move(labels));
  } catch (const InvalidObjectError& e) {
    throw ParseError(e.what());
  }
}

LineCycle line_cycle(const AntipodalArrangement& arr, int i, int sign) {
  if (arr.k != 2) throw DimensionError("line cycles need a 2-sphere arrangement");
  const int n = arr.size();
  if (n < 4) throw InvalidObjectError("line cycles need at least 4 points");
  if (i < 0 || i >= n) throw DimensionError("point index out of range");
  if (sign != 1 && sign != -1) throw InvalidObjectError("sign must be +1 or -1");

  const std::vector<Vector> frame = oriented_complement({arr.rep(i)});
  std::vector<int> order;
  std::vector<Dir> dirs(n);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    Dir u{dot(arr.rep(j), frame[0]), dot(arr.rep(j), frame[1])};
    const int sy = u.y.sign();
    if (sy < 0 || (sy == 0 && u.x.sign() < 0)) {
      u.x = -u.x;
      u.y = -u.y;
    }
    if (u.x.is_zero() && u.y.is_zero()) {
      throw InvalidObjectError("points are not in general position");
    }
    dirs[j] = std::move(u);
    order.push_back(j);
  }
  // Within the half-plane, u precedes w exactly when w is counterclockwise
  // of u.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cross(dirs[a], dirs[b]).sign() > 0;
  });
  LineCycle c(std::move(order));
  return sign > 0 ? c : c.inverse();
}

CycleInvariantSet all_cycle_invariants(const AntipodalArrangement& arr,
                                       int jobs) {
  if (arr.k < 2) throw DimensionError("cycle invariants need k >= 2");
  const int n = arr.size();
  if (n < arr.k + 2) throw InvalidObjectError("cycle invariants need n >= k+2");
  const auto diag = validate_arrangement(arr);
  if (!diag.valid) throw InvalidObjectError("invalid arrangement: " + diag.reason);

  const auto subsets = combinations(n, arr.k - 2);
  std::vector<CycleInvariantSet> parts(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t s) {
    const auto& a = subsets[s];
    const ProjectedArrangement proj = project_arrangement(arr, a);
    const int m = proj.arrangement.size();
    for (int t = 0; t < m; ++t) {
      const LineCycle local = line_cycle(proj.arrangement, t, 1);
      const LineCycle plus = local.conjugate(proj.labels);
      const int j = proj.labels[t];
      parts[s][CycleKey{a, j, 1}] = plus;
      parts[s][CycleKey{a, j, -1}] = plus.inverse();
    }
  });
  CycleInvariantSet out;
  for (auto& p : parts) out.merge(p);
  return out;
}

std::string format_key(const CycleKey& key) {
  std::string s = "[";
  for (std::size_t i = 0; i < key.a.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(key.a[i] + 1);
  }
  s += "] " + std::to_string(key.j + 1) + (key.sign > 0 ? " +" : " -");
  return s;
}

std::string to_text(const CycleInvariantSet& set) {
  std::string out;
  for (const auto& [key, cycle] : set) {
    out += format_key(key) + " " + cycle.str() + "\n";
  }
  return out;
}

}  // namespace hyparr
