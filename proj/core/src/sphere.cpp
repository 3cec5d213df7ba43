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


#include "hyparr/sphere.hpp"

#include <algorithm>
#include <utility>

#include "hyparr/combinatorics.hpp"
#include "hyparr/errors.hpp"

namespace hyparr {

SpherePoint SpherePoint::canonicalize(const Vector& v) {
  auto lead = std::find_if(v.begin(), v.end(),
                           [](const FieldValue& x) { return !x.is_zero(); });
  if (lead == v.end()) throw InvalidObjectError("zero vector is not a sphere point");
  const FieldValue s = lead->abs().inverse();
  SpherePoint p;
  p.rep_ = scale(v, s);
  return p;
}

SpherePoint SpherePoint::antipode() const {
  SpherePoint p;
  p.rep_ = rep_;
  for (auto& x : p.rep_) x = -x;
  return p;
}

bool independent(const std::vector<SpherePoint>& points) {
  if (points.empty() || points.size() > points[0].ambient_dim()) {
    throw DimensionError("independence needs between 1 and k+1 points");
  }
  std::vector<Vector> rows;
  for (const auto& p : points) rows.push_back(p.rep());
  return rank(Matrix::from_rows(rows)) == points.size();
}

bool PositiveCombination::is_positive() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

PositiveCombination positive_combination(const Vector& target,
                                         const std::vector<Vector>& basis) {
  if (basis.size() != target.size()) {
    throw DimensionError("basis size must equal the ambient dimension");
  }
  const Matrix cols = Matrix::from_rows(basis).transpose();
  PositiveCombination pc;
  pc.coefficients = solve(cols, target);
  for (const auto& c : pc.coefficients) pc.signs.push_back(c.sign());
  return pc;
}

PositiveCombination positive_combination(const SpherePoint& target,
                                         const std::vector<SpherePoint>& basis) {
  std::vector<Vector> reps;
  for (const auto& b : basis) reps.push_back(b.rep());
  return positive_combination(target.rep(), reps);
}

ArrangementDiagnosis validate_arrangement(const std::vector<SpherePoint>& points,
                                          int k) {
  ArrangementDiagnosis d;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(points[i].ambient_dim()) != k + 1) {
      d.valid = false;
      d.violating = {i};
      d.reason = "point has wrong dimension";
      return d;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j] || points[i] == points[j].antipode()) {
        d.valid = false;
        d.violating = {i, j};
        d.reason = "points are equal or antipodal";
        return d;
      }
    }
  }
  const int r = std::min(k + 1, n);
  for (const auto& subset : combinations(n, r)) {
    std::vector<Vector> rows;
    for (int i : subset) rows.push_back(points[i].rep());
    if (rank(Matrix::from_rows(rows)) != subset.size()) {
      d.valid = false;
      d.violating = subset;
      d.reason = "linearly dependent subset";
      return d;
    }
  }
  return d;
}

ArrangementDiagnosis validate_arrangement(const AntipodalArrangement& arr) {
  return validate_arrangement(arr.points, arr.k);
}

std::vector<Vector> oriented_complement(const std::vector<Vector>& rows) {
  const Matrix t = Matrix::from_rows(rows);
  std::vector<Vector> basis = kernel_basis(t);
  if (basis.empty()) return basis;
  std::vector<Vector> full = rows;
  full.insert(full.end(), basis.begin(), basis.end());
  const int s = det(Matrix::from_rows(full)).sign();
  if (s == 0) throw SingularMatrixError("spanning rows are linearly dependent");
  if (s < 0) {
    for (auto& x : basis.back()) x = -x;
  }
  return basis;
}

ProjectedArrangement project_arrangement(const AntipodalArrangement& arr,
                                         const std::vector<int>& a) {
  const int n = arr.size();
  ProjectedArrangement out;
  out.arrangement.k = arr.k - static_cast<int>(a.size());
  if (a.empty()) {
    out.arrangement = arr;
    for (int i = 0; i < n; ++i) out.labels.push_back(i);
    return out;
  }
  if (static_cast<int>(a.size()) >= arr.k) {
    throw DimensionError("projection set too large for the sphere dimension");
  }
  std::vector<Vector> span;
  std::vector<bool> in_a(n, false);
  for (int i : a) {
    if (i < 0 || i >= n || in_a[i]) throw DimensionError("bad projection set");
    in_a[i] = true;
    span.push_back(arr.rep(i));
  }
  const ProjectorPair pq = projectors(Matrix::from_rows(span));
  const std::vector<Vector> frame = oriented_complement(span);
  for (int j = 0; j < n; ++j) {
    if (in_a[j]) continue;
    const Vector q = pq.q * arr.rep(j);
    Vector w;
    w.reserve(frame.size());
    for (const auto& b : frame) w.push_back(dot(q, b));
    out.arrangement.points.push_back(SpherePoint::canonicalize(w));
    out.labels.push_back(j);
  }
  return out;
}

}  // namespace hyparr
