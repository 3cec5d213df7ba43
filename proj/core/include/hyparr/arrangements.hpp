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

#ifndef HYPARR_ARRANGEMENTS_HPP_
#define HYPARR_ARRANGEMENTS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/normal_systems.hpp"

namespace hyparr {

// Hyperplanes H_i : a_i . x = c_i in F^m, 0-based labels.
struct HyperplaneArrangement {
  int m = 0;
  std::vector<Vector> coeffs;
  Vector constants;

  int size() const { return static_cast<int>(coeffs.size()); }
  FieldTag tag() const;
};

struct HyperplaneDiagnosis {
  bool valid = true;
  std::vector<int> violating;  // 0-based labels
  std::string reason;
};

// General position: any r <= m of the normals are independent and any m+1
// hyperplanes have no common point.
HyperplaneDiagnosis validate(const HyperplaneArrangement& ha);

NormalSystem normal_system_of(const HyperplaneArrangement& ha);
HyperplaneArrangement hyperplanes_from(const NormalSystem& ns,
                                       const Vector& constants);

struct Region {
  std::vector<int> signs;  // sign of a_i . x - c_i inside the region
  bool bounded = false;
  Vector point;  // an interior point
};

struct RegionCounts {
  std::int64_t total = 0;
  std::int64_t bounded = 0;
  std::int64_t unbounded = 0;

  friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

// Regions sorted by sign vector (- before +). n <= 12.
std::vector<Region> enumerate_regions(const HyperplaneArrangement& ha);
RegionCounts region_counts(const HyperplaneArrangement& ha);
// Closed forms for n hyperplanes in general position in F^m.
RegionCounts expected_region_counts(int n, int m);

// Sign of det[1 | P_i] over m+1 points of F^m. Throws InvalidObjectError on
// affinely dependent points.
int vertex_orientation(const std::vector<Vector>& points);

// Sign of det[a_i | c_i] for the given m+1 rows, listed in order.
int bordered_sign(const std::vector<Vector>& normals, const Vector& constants);

struct OrientationCheck {
  int vertex_sign = 0;
  int normal_sign = 0;
};

// For m+1 hyperplanes bounding a simplex: the orientation of the opposite
// vertices P_1..P_{m+1} and the sign of the bordered normal matrix. With
// require_outward, throws InvalidObjectError unless a_i . P_i < c_i for all i.
OrientationCheck simplex_orientation_check(const std::vector<Vector>& normals,
                                           const Vector& constants,
                                           bool require_outward = true);

// Vertex of the simplex opposite to each listed hyperplane.
std::vector<Vector> simplex_vertices(const HyperplaneArrangement& ha,
                                     const std::vector<int>& subset);

// Whether the simplex cut out by `subset` (m+1 labels) is a region: every
// other hyperplane has all simplex vertices strictly on one side.
bool is_simplex_polyhedrality(const HyperplaneArrangement& ha,
                              const std::vector<int>& subset);
std::vector<std::vector<int>> simplex_polyhedralities(const HyperplaneArrangement& ha);

// (m+1)-subset (ascending, 0-based) -> sign.
using ConcurrencySignMap = std::map<std::vector<int>, int>;

ConcurrencySignMap concurrency_sign_map(const HyperplaneArrangement& ha);

// Signs of the concurrency determinants of ha2 under the normals
// delta(v_i) = signs[i] * a2_{perm[i]} and constants signs[i] * c2_{perm[i]},
// rows in the order of the ascending source subset, keyed by the sorted image.
ConcurrencySignMap induced_sign_map(const HyperplaneArrangement& ha2,
                                    const SignedBijection& w);

struct ArrangementIsoResult {
  bool isomorphic = false;
  IsoWitness witness;
  char branch = 'a';  // 'a': signs agree everywhere, 'b': all negated
};

// Tries each normal-system witness in order and accepts the first whose
// induced sign map agrees with ha1's everywhere or disagrees everywhere.
ArrangementIsoResult arrangements_isomorphic(const HyperplaneArrangement& ha1,
                                             const HyperplaneArrangement& ha2,
                                             const SearchOptions& options = {});

// Labels of the hyperplanes meeting the line cut out by `line` (m-1 labels),
// ordered along a fixed direction of that line.
std::vector<int> vertex_order_on_line(const HyperplaneArrangement& ha,
                                      const std::vector<int>& line);

// Whether the subscript map perm carries the vertex order on every line of
// ha1 to the vertex order (either direction) on the image line of ha2. The
// signs of phi are not used.
bool isomorphic_by_definition(const HyperplaneArrangement& ha1,
                              const HyperplaneArrangement& ha2,
                              const SignedBijection& phi);

// Some permutation satisfying isomorphic_by_definition, by exhaustive search.
// n <= 8.
bool isomorphic_by_definition_search(const HyperplaneArrangement& ha1,
                                     const HyperplaneArrangement& ha2,
                                     std::vector<int>* perm = nullptr);

// Constants c' in the cone adjacent across the wall of `subset`: exactly the
// sign of `subset` differs from concurrency_sign_map(ha). Throws
// InvalidObjectError unless subset is a simplex polyhedrality.
Vector adjacent_cone_constants(const HyperplaneArrangement& ha,
                               const std::vector<int>& subset);

// Subsets whose concurrency hyperplane is a facet of the cone of constants
// containing c. n <= 8.
std::set<std::vector<int>> cone_facets(const HyperplaneArrangement& ha);

struct InfinityResult {
  bool is_infinity = false;
  std::vector<int> order;  // sigma, 0-based
};

// Looks for an order in which every hyperplane has all vertices of the
// earlier ones strictly on one side.
InfinityResult is_infinity_arrangement(const HyperplaneArrangement& ha);

}  // namespace hyparr

#endif  // HYPARR_ARRANGEMENTS_HPP_
