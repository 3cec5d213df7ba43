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


#include "hyparr/arrangements.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hyparr/combinatorics.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/fourier_motzkin.hpp"

namespace hyparr {
namespace {

void require_valid(const HyperplaneArrangement& ha) {
  const auto d = validate(ha);
  if (!d.valid) throw InvalidObjectError("invalid arrangement: " + d.reason);
}

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

Matrix bordered(const HyperplaneArrangement& ha, const std::vector<int>& rows,
                const Vector& constants) {
  std::vector<Vector> out;
  for (int i : rows) {
    Vector r = ha.coeffs[i];
    r.push_back(constants[i]);
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(out);
}

// Linear form y -> M_U(y) as a vector of length n.
Vector concurrency_form(const HyperplaneArrangement& ha, const std::vector<int>& u) {
  const FieldTag tag = ha.tag();
  Vector g(ha.size(), FieldValue::zero(tag));
  Vector unit(ha.size(), FieldValue::zero(tag));
  for (int i : u) {
    unit[i] = FieldValue::one(tag);
    g[i] = det(bordered(ha, u, unit));
    unit[i] = FieldValue::zero(tag);
  }
  return g;
}

// The cone of constants modulo translations: coordinates y_0..y_{m-1} are
// pinned to zero, which every constants vector reaches by a translation.
struct ReducedCone {
  std::vector<std::vector<int>> subsets;
  std::vector<Vector> forms;          // full length n
  std::vector<Vector> reduced_forms;  // coordinates m..n-1
  std::vector<int> signs;             // signs at the original constants
};

ReducedCone reduced_cone(const HyperplaneArrangement& ha) {
  ReducedCone cone;
  const int n = ha.size();
  cone.subsets = combinations(n, ha.m + 1);
  for (const auto& u : cone.subsets) {
    Vector g = concurrency_form(ha, u);
    cone.signs.push_back(dot(g, ha.constants).sign());
    cone.reduced_forms.emplace_back(g.begin() + ha.m, g.end());
    cone.forms.push_back(std::move(g));
  }
  return cone;
}

// Interior point of the face M_wall = 0 of the cone, in reduced
// coordinates, if that face is a facet.
FeasibilityResult facet_point(const HyperplaneArrangement& ha,
                              const ReducedCone& cone, std::size_t wall) {
  const std::size_t dim = ha.size() - ha.m;
  const FieldTag tag = ha.tag();
  std::vector<LinearInequality> rows;
  for (std::size_t u = 0; u < cone.subsets.size(); ++u) {
    const Vector& g = cone.reduced_forms[u];
    if (u == wall) {
      rows.push_back({g, FieldValue::zero(tag), false});
      rows.push_back({negated(g), FieldValue::zero(tag), false});
    } else {
      rows.push_back({cone.signs[u] > 0 ? g : negated(g), FieldValue::zero(tag), true});
    }
  }
  return fm_feasible(rows, dim, tag);
}

}  // namespace

FieldTag HyperplaneArrangement::tag() const {
  if (!coeffs.empty() && !coeffs[0].empty()) return coeffs[0][0].tag();
  if (!constants.empty()) return constants[0].tag();
  return FieldTag{};
}

HyperplaneDiagnosis validate(const HyperplaneArrangement& ha) {
  HyperplaneDiagnosis d;
  const int n = ha.size();
  if (ha.m < 1) {
    d.valid = false;
    d.reason = "dimension must be positive";
    return d;
  }
  if (static_cast<int>(ha.constants.size()) != n) {
    d.valid = false;
    d.reason = "number of constants differs from number of hyperplanes";
    return d;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ha.coeffs[i].size()) != ha.m) {
      d.valid = false;
      d.violating = {i};
      d.reason = "coefficient row has wrong length";
      return d;
    }
  }
  try {
    for (const auto& subset : combinations(n, std::min(ha.m, n))) {
      std::vector<Vector> rows;
      for (int i : subset) rows.push_back(ha.coeffs[i]);
      if (rank(Matrix::from_rows(rows)) != subset.size()) {
        d.valid = false;
        d.violating = subset;
        d.reason = "condition 1 fails: normals are dependent";
        return d;
      }
    }
    for (const auto& subset : combinations(n, ha.m + 1)) {
      if (det(bordered(ha, subset, ha.constants)).is_zero()) {
        d.valid = false;
        d.violating = subset;
        d.reason = "condition 2 fails: m+1 hyperplanes meet";
        return d;
      }
    }
  } catch (const FieldError& e) {
    d.valid = false;
    d.reason = e.what();
  }
  return d;
}

NormalSystem normal_system_of(const HyperplaneArrangement& ha) {
  require_valid(ha);
  return NormalSystem{ha.m, ha.coeffs};
}

HyperplaneArrangement hyperplanes_from(const NormalSystem& ns,
                                       const Vector& constants) {
  if (static_cast<int>(constants.size()) != ns.size()) {
    throw DimensionError("one constant per normal is required");
  }
  return HyperplaneArrangement{ns.m, ns.vectors, constants};
}

std::vector<Region> enumerate_regions(const HyperplaneArrangement& ha) {
  require_valid(ha);
  const int n = ha.size();
  if (n > 12) throw SizeGuardError("region enumeration is limited to 12 hyperplanes");
  const FieldTag tag = ha.tag();
  auto side_row = [&](int i, int s) {
    return LinearInequality{s > 0 ? ha.coeffs[i] : negated(ha.coeffs[i]),
                            s > 0 ? ha.constants[i] : -ha.constants[i], true};
  };
  std::vector<Region> regions(1);
  regions[0].point.assign(ha.m, FieldValue::zero(tag));
  for (int i = 0; i < n; ++i) {
    std::vector<Region> next;
    for (const auto& r : regions) {
      const int here = (dot(ha.coeffs[i], r.point) - ha.constants[i]).sign();
      for (int s : {-1, 1}) {
        Region e;
        e.signs = r.signs;
        e.signs.push_back(s);
        if (s == here) {
          e.point = r.point;
        } else {
          std::vector<LinearInequality> rows;
          for (int j = 0; j <= i; ++j) rows.push_back(side_row(j, e.signs[j]));
          auto f = fm_feasible(rows, ha.m, tag);
          if (!f.feasible) continue;
          e.point = std::move(f.point);
        }
        next.push_back(std::move(e));
      }
    }
    regions = std::move(next);
  }
  for (auto& r : regions) {
    if (n < ha.m) {
      r.bounded = false;
      continue;
    }
    // Bounded exactly when the recession cone {d : s_i a_i . d >= 0} is {0}.
    std::vector<LinearInequality> rows;
    Vector total(ha.m, FieldValue::zero(tag));
    for (int i = 0; i < n; ++i) {
      Vector g = r.signs[i] > 0 ? ha.coeffs[i] : negated(ha.coeffs[i]);
      total = add(total, g);
      rows.push_back({std::move(g), FieldValue::zero(tag), false});
    }
    rows.push_back({total, FieldValue::one(tag), false});
    r.bounded = !fm_feasible(rows, ha.m, tag).feasible;
  }
  std::sort(regions.begin(), regions.end(),
            [](const Region& x, const Region& y) { return x.signs < y.signs; });
  return regions;
}

RegionCounts region_counts(const HyperplaneArrangement& ha) {
  RegionCounts c;
  for (const auto& r : enumerate_regions(ha)) {
    ++c.total;
    if (r.bounded) ++c.bounded;
  }
  c.unbounded = c.total - c.bounded;
  return c;
}

RegionCounts expected_region_counts(int n, int m) {
  RegionCounts c;
  for (int i = 0; i <= m; ++i) c.total += binomial(n, i);
  c.bounded = binomial(n - 1, m);
  for (int i = 0; i <= m - 1; ++i) c.unbounded += binomial(n, i);
  c.unbounded += binomial(n - 1, m - 1);
  return c;
}

int vertex_orientation(const std::vector<Vector>& points) {
  if (points.empty()) throw DimensionError("no points");
  const std::size_t m = points[0].size();
  if (points.size() != m + 1) throw DimensionError("need m+1 points in F^m");
  std::vector<Vector> rows;
  for (const auto& p : points) {
    if (p.size() != m) throw DimensionError("points of different dimension");
    Vector r{FieldValue::one(p.empty() ? FieldTag{} : p[0].tag())};
    r.insert(r.end(), p.begin(), p.end());
    rows.push_back(std::move(r));
  }
  const int s = det(Matrix::from_rows(rows)).sign();
  if (s == 0) throw InvalidObjectError("points are affinely dependent");
  return s;
}

int bordered_sign(const std::vector<Vector>& normals, const Vector& constants) {
  if (normals.size() != constants.size()) throw DimensionError("row count mismatch");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Vector r = normals[i];
    r.push_back(constants[i]);
    rows.push_back(std::move(r));
  }
  return det(Matrix::from_rows(rows)).sign();
}

std::vector<Vector> simplex_vertices(const HyperplaneArrangement& ha,
                                     const std::vector<int>& subset) {
  if (static_cast<int>(subset.size()) != ha.m + 1) {
    throw DimensionError("a simplex needs m+1 hyperplanes");
  }
  std::vector<Vector> vertices;
  for (std::size_t skip = 0; skip < subset.size(); ++skip) {
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t r = 0; r < subset.size(); ++r) {
      if (r == skip) continue;
      rows.push_back(ha.coeffs[subset[r]]);
      rhs.push_back(ha.constants[subset[r]]);
    }
    vertices.push_back(solve(Matrix::from_rows(rows), rhs));
  }
  return vertices;
}

OrientationCheck simplex_orientation_check(const std::vector<Vector>& normals,
                                           const Vector& constants,
                                           bool require_outward) {
  if (normals.empty()) throw DimensionError("no hyperplanes");
  HyperplaneArrangement ha{static_cast<int>(normals[0].size()), normals, constants};
  std::vector<int> all(normals.size());
  std::iota(all.begin(), all.end(), 0);
  const auto vertices = simplex_vertices(ha, all);
  if (require_outward) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if ((dot(normals[i], vertices[i]) - constants[i]).sign() >= 0) {
        throw InvalidObjectError("normal " + std::to_string(i + 1) + " is not outward");
      }
    }
  }
  return OrientationCheck{vertex_orientation(vertices), bordered_sign(normals, constants)};
}

bool is_simplex_polyhedrality(const HyperplaneArrangement& ha,
                              const std::vector<int>& subset) {
  require_valid(ha);
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != ha.m + 1 ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.front() < 0 || sorted.back() >= ha.size()) {
    throw DimensionError("subset must hold m+1 distinct labels");
  }
  const auto vertices = simplex_vertices(ha, sorted);
  for (int h = 0; h < ha.size(); ++h) {
    if (std::binary_search(sorted.begin(), sorted.end(), h)) continue;
    int side = 0;
    for (const auto& v : vertices) {
      const int s = (dot(ha.coeffs[h], v) - ha.constants[h]).sign();
      if (s == 0 || (side != 0 && s != side)) return false;
      side = s;
    }
  }
  return true;
}

std::vector<std::vector<int>> simplex_polyhedralities(const HyperplaneArrangement& ha) {
  std::vector<std::vector<int>> out;
  for (const auto& subset : combinations(ha.size(), ha.m + 1)) {
    if (is_simplex_polyhedrality(ha, subset)) out.push_back(subset);
  }
  return out;
}

ConcurrencySignMap concurrency_sign_map(const HyperplaneArrangement& ha) {
  require_valid(ha);
  ConcurrencySignMap out;
  for (const auto& subset : combinations(ha.size(), ha.m + 1)) {
    const int s = det(bordered(ha, subset, ha.constants)).sign();
    if (s == 0) throw InvalidObjectError("m+1 hyperplanes are concurrent");
    out[subset] = s;
  }
  return out;
}

ConcurrencySignMap induced_sign_map(const HyperplaneArrangement& ha2,
                                    const SignedBijection& w) {
  require_valid(ha2);
  const int n = ha2.size();
  if (static_cast<int>(w.perm.size()) != n || static_cast<int>(w.signs.size()) != n) {
    throw DimensionError("witness size does not match the arrangement");
  }
  std::vector<int> seen(n, 0);
  for (int x : w.perm) {
    if (x < 0 || x >= n || seen[x]++) throw InvalidObjectError("not a permutation");
  }
  ConcurrencySignMap out;
  for (const auto& subset : combinations(n, ha2.m + 1)) {
    std::vector<Vector> rows;
    std::vector<int> key;
    for (int i : subset) {
      Vector r = ha2.coeffs[w.perm[i]];
      r.push_back(ha2.constants[w.perm[i]]);
      if (w.signs[i] < 0) r = negated(std::move(r));
      rows.push_back(std::move(r));
      key.push_back(w.perm[i]);
    }
    std::sort(key.begin(), key.end());
    out[key] = det(Matrix::from_rows(rows)).sign();
  }
  return out;
}

ArrangementIsoResult arrangements_isomorphic(const HyperplaneArrangement& ha1,
                                             const HyperplaneArrangement& ha2,
                                             const SearchOptions& options) {
  require_valid(ha1);
  require_valid(ha2);
  if (ha1.m != ha2.m || ha1.size() != ha2.size()) {
    throw DimensionError("arrangements of different shape");
  }
  const ConcurrencySignMap s1 = concurrency_sign_map(ha1);
  const auto witnesses =
      find_isomorphisms(normal_system_of(ha1), normal_system_of(ha2), options);
  ArrangementIsoResult result;
  for (const auto& w : witnesses) {
    const ConcurrencySignMap s2 = induced_sign_map(ha2, w.bijection());
    bool agree = true;
    bool disagree = true;
    for (const auto& [subset, sign] : s1) {
      std::vector<int> key;
      for (int i : subset) key.push_back(w.perm[i]);
      std::sort(key.begin(), key.end());
      const int other = s2.at(key);
      agree = agree && sign == other;
      disagree = disagree && sign == -other;
      if (!agree && !disagree) break;
    }
    if (agree || disagree) {
      result.isomorphic = true;
      result.witness = w;
      result.branch = agree ? 'a' : 'b';
      return result;
    }
  }
  return result;
}

std::vector<int> vertex_order_on_line(const HyperplaneArrangement& ha,
                                      const std::vector<int>& line) {
  if (static_cast<int>(line.size()) != ha.m - 1) {
    throw DimensionError("a line is cut out by m-1 hyperplanes");
  }
  const FieldTag tag = ha.tag();
  Vector base(ha.m, FieldValue::zero(tag));
  Vector dir(ha.m, FieldValue::zero(tag));
  if (line.empty()) {
    dir[0] = FieldValue::one(tag);
  } else {
    std::vector<Vector> rows;
    Vector rhs;
    for (int i : line) {
      rows.push_back(ha.coeffs[i]);
      rhs.push_back(ha.constants[i]);
    }
    const Matrix a = Matrix::from_rows(rows);
    const auto kernel = kernel_basis(a);
    if (kernel.size() != 1 || !particular_solution(a, rhs, &base)) {
      throw InvalidObjectError("hyperplanes do not cut out a line");
    }
    dir = kernel[0];
  }
  std::vector<std::pair<FieldValue, int>> params;
  for (int h = 0; h < ha.size(); ++h) {
    if (std::find(line.begin(), line.end(), h) != line.end()) continue;
    const FieldValue slope = dot(ha.coeffs[h], dir);
    if (slope.is_zero()) throw InvalidObjectError("hyperplane parallel to a line");
    params.emplace_back((ha.constants[h] - dot(ha.coeffs[h], base)) / slope, h);
  }
  std::sort(params.begin(), params.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> order;
  for (const auto& p : params) order.push_back(p.second);
  return order;
}

bool isomorphic_by_definition(const HyperplaneArrangement& ha1,
                              const HyperplaneArrangement& ha2,
                              const SignedBijection& phi) {
  require_valid(ha1);
  require_valid(ha2);
  if (ha1.m != ha2.m || ha1.size() != ha2.size()) return false;
  const int n = ha1.size();
  if (static_cast<int>(phi.perm.size()) != n) {
    throw DimensionError("bijection size does not match");
  }
  for (const auto& line : combinations(n, ha1.m - 1)) {
    std::vector<int> image;
    for (int i : line) image.push_back(phi.perm[i]);
    std::sort(image.begin(), image.end());
    std::vector<int> mapped;
    for (int h : vertex_order_on_line(ha1, line)) mapped.push_back(phi.perm[h]);
    const std::vector<int> target = vertex_order_on_line(ha2, image);
    if (mapped != target && !std::equal(mapped.begin(), mapped.end(), target.rbegin())) {
      return false;
    }
  }
  return true;
}

bool isomorphic_by_definition_search(const HyperplaneArrangement& ha1,
                                     const HyperplaneArrangement& ha2,
                                     std::vector<int>* perm) {
  const int n = ha1.size();
  if (n > 8) throw SizeGuardError("definition search is limited to 8 hyperplanes");
  if (ha1.m != ha2.m || ha1.size() != ha2.size()) return false;
  SignedBijection phi = identity_bijection(n);
  do {
    if (isomorphic_by_definition(ha1, ha2, phi)) {
      if (perm != nullptr) *perm = phi.perm;
      return true;
    }
  } while (std::next_permutation(phi.perm.begin(), phi.perm.end()));
  return false;
}

Vector adjacent_cone_constants(const HyperplaneArrangement& ha,
                               const std::vector<int>& subset) {
  if (!is_simplex_polyhedrality(ha, subset)) {
    throw InvalidObjectError("subset is not a simplex polyhedrality");
  }
  std::vector<int> wall_subset = subset;
  std::sort(wall_subset.begin(), wall_subset.end());
  const ReducedCone cone = reduced_cone(ha);
  const auto wall = static_cast<std::size_t>(
      std::find(cone.subsets.begin(), cone.subsets.end(), wall_subset) -
      cone.subsets.begin());
  const FieldTag tag = ha.tag();
  const int n = ha.size();

  // Translate c so that its first m entries vanish; signs do not change.
  std::vector<Vector> head(ha.coeffs.begin(), ha.coeffs.begin() + ha.m);
  Vector c_head(ha.constants.begin(), ha.constants.begin() + ha.m);
  const Vector z = solve(Matrix::from_rows(head), c_head);
  Vector shift(n);
  for (int i = 0; i < n; ++i) shift[i] = dot(ha.coeffs[i], z);
  const Vector c_red = sub(ha.constants, shift);

  Vector y_star(n, FieldValue::zero(tag));
  if (n > ha.m + 1) {
    const FeasibilityResult f = facet_point(ha, cone, wall);
    if (!f.feasible) {
      throw Error("simplex polyhedrality without a cone facet");
    }
    for (int i = ha.m; i < n; ++i) y_star[i] = f.point[i - ha.m];
  }
  // c' = y* + t (y* - c) keeps every other sign once t < alpha / (beta - alpha).
  FieldValue t = FieldValue::one(tag);
  for (std::size_t u = 0; u < cone.subsets.size(); ++u) {
    if (u == wall) continue;
    const FieldValue s = FieldValue::from_int(tag, cone.signs[u]);
    const FieldValue alpha = s * dot(cone.forms[u], y_star);
    const FieldValue beta = s * dot(cone.forms[u], c_red);
    if (beta > alpha) {
      const FieldValue bound = alpha / (FieldValue::from_int(tag, 2) * (beta - alpha));
      if (bound < t) t = bound;
    }
  }
  const Vector moved = add(y_star, scale(sub(y_star, c_red), t));
  return add(moved, shift);
}

std::set<std::vector<int>> cone_facets(const HyperplaneArrangement& ha) {
  require_valid(ha);
  if (ha.size() > 8) throw SizeGuardError("cone facets are limited to 8 hyperplanes");
  const ReducedCone cone = reduced_cone(ha);
  std::set<std::vector<int>> out;
  for (std::size_t u = 0; u < cone.subsets.size(); ++u) {
    if (cone.subsets.size() == 1 || facet_point(ha, cone, u).feasible) {
      out.insert(cone.subsets[u]);
    }
  }
  return out;
}

InfinityResult is_infinity_arrangement(const HyperplaneArrangement& ha) {
  require_valid(ha);
  const int n = ha.size();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> reversed_order;
  auto at_infinity = [&](int h, const std::vector<int>& others) {
    int side = 0;
    for (const auto& vs : combinations(static_cast<int>(others.size()), ha.m)) {
      std::vector<Vector> rows;
      Vector rhs;
      for (int idx : vs) {
        rows.push_back(ha.coeffs[others[idx]]);
        rhs.push_back(ha.constants[others[idx]]);
      }
      const Vector v = solve(Matrix::from_rows(rows), rhs);
      const int s = (dot(ha.coeffs[h], v) - ha.constants[h]).sign();
      if (s == 0 || (side != 0 && s != side)) return false;
      side = s;
    }
    return true;
  };
  while (!remaining.empty()) {
    bool placed = false;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      std::vector<int> others;
      for (int x : remaining) {
        if (x != *it) others.push_back(x);
      }
      if (at_infinity(*it, others)) {
        reversed_order.push_back(*it);
        remaining = std::move(others);
        placed = true;
        break;
      }
    }
    if (!placed) return InfinityResult{};
  }
  InfinityResult result;
  result.is_infinity = true;
  result.order.assign(reversed_order.rbegin(), reversed_order.rend());
  return result;
}

}  // namespace hyparr
