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

#ifndef HYPARR_SPHERE_HPP_
#define HYPARR_SPHERE_HPP_

#include <string>
#include <vector>

#include "hyparr/linalg.hpp"

namespace hyparr {

// A ray class {t v : t > 0} of a nonzero vector, stored with its first
// nonzero coordinate scaled to +1 or -1.
class SpherePoint {
 public:
  // Throws InvalidObjectError for the zero vector.
  static SpherePoint canonicalize(const Vector& v);

  const Vector& rep() const { return rep_; }
  std::size_t ambient_dim() const { return rep_.size(); }
  SpherePoint antipode() const;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  Vector rep_;
};

// n antipodal pairs {P_i, -P_i} on the k-sphere in F^{k+1}, 0-based labels.
struct AntipodalArrangement {
  int k = 2;
  std::vector<SpherePoint> points;

  int size() const { return static_cast<int>(points.size()); }
  const Vector& rep(int i) const { return points[i].rep(); }
};

// Throws DimensionError unless 1 <= points.size() <= ambient dimension.
bool independent(const std::vector<SpherePoint>& points);

struct PositiveCombination {
  Vector coefficients;
  std::vector<int> signs;

  bool is_positive() const;
};

// Coefficients of target in the given basis (general signs). Throws
// SingularMatrixError when the basis is dependent.
PositiveCombination positive_combination(const Vector& target,
                                         const std::vector<Vector>& basis);
PositiveCombination positive_combination(const SpherePoint& target,
                                         const std::vector<SpherePoint>& basis);

struct ArrangementDiagnosis {
  bool valid = true;
  std::vector<int> violating;  // 0-based labels of the first bad subset
  std::string reason;
};

ArrangementDiagnosis validate_arrangement(const std::vector<SpherePoint>& points,
                                          int k);
ArrangementDiagnosis validate_arrangement(const AntipodalArrangement& arr);

// Basis of the orthogonal complement of span(rows), ordered by free column,
// with the last vector negated if needed so that det(rows; basis) > 0.
std::vector<Vector> oriented_complement(const std::vector<Vector>& rows);

struct ProjectedArrangement {
  AntipodalArrangement arrangement;
  std::vector<int> labels;  // labels[t] is the original label of point t
};

// Projects every point outside A into span(A)^perp and expresses it in the
// oriented complement basis. The result lives on the (k - |A|)-sphere.
ProjectedArrangement project_arrangement(const AntipodalArrangement& arr,
                                         const std::vector<int>& a);

}  // namespace hyparr

#endif  // HYPARR_SPHERE_HPP_
