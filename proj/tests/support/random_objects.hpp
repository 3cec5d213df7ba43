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

// Random valid objects and structure-preserving images for property tests.

#ifndef HYPARR_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_
#define HYPARR_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hyparr/arrangements.hpp"
#include "hyparr/linalg.hpp"
#include "hyparr/normal_systems.hpp"
#include "hyparr/sphere.hpp"

namespace hyparr::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  int sign() { return uniform(0, 1) ? 1 : -1; }
  FieldValue small(int range) { return FieldValue(uniform(-range, range)); }
  FieldValue positive(int range) {
    return FieldValue(Rational(uniform(1, range), uniform(1, range)));
  }

  Vector vector(int dim, int range) {
    Vector v;
    for (int i = 0; i < dim; ++i) v.push_back(small(range));
    return v;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  std::vector<int> signs(int n) {
    std::vector<int> s(n);
    for (auto& x : s) x = sign();
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline NormalSystem random_normal_system(Random& rnd, int n, int m, int range = 6) {
  for (;;) {
    NormalSystem ns{m, {}};
    for (int i = 0; i < n; ++i) ns.vectors.push_back(rnd.vector(m, range));
    if (validate_normal_system(ns).valid) return ns;
  }
}

inline AntipodalArrangement random_sphere_arrangement(Random& rnd, int n, int k,
                                                      int range = 6) {
  return to_arrangement(random_normal_system(rnd, n, k + 1, range));
}

inline HyperplaneArrangement random_arrangement(Random& rnd, int n, int m,
                                                int range = 6) {
  for (;;) {
    HyperplaneArrangement ha{m, {}, rnd.vector(n, 3 * range)};
    for (int i = 0; i < n; ++i) ha.coeffs.push_back(rnd.vector(m, range));
    if (validate(ha).valid) return ha;
  }
}

inline Matrix random_invertible(Random& rnd, int m, int range = 3) {
  for (;;) {
    Matrix a(m, m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) a(r, c) = rnd.small(range);
    }
    if (!det(a).is_zero()) return a;
  }
}

// Vector i goes to slot perm[i] as signs[i] * scale_i * N v_i with positive
// scales, so (perm, signs) is a convex positive bijection onto the image.
inline NormalSystem linear_image(Random& rnd, const NormalSystem& ns,
                                 const Matrix& n_map, const std::vector<int>& perm,
                                 const std::vector<int>& signs) {
  NormalSystem out{ns.m, std::vector<Vector>(ns.vectors.size())};
  for (std::size_t i = 0; i < ns.vectors.size(); ++i) {
    const Vector v = n_map * ns.vectors[i];
    out.vectors[perm[i]] =
        scale(v, FieldValue(signs[i]) * rnd.positive(4));
  }
  return out;
}

// Image of ha under x -> M x + t. Hyperplane i goes to slot perm[i]; a -1 in
// signs rewrites its equation with both sides negated.
inline HyperplaneArrangement affine_image(const HyperplaneArrangement& ha,
                                          const Matrix& m, const Vector& t,
                                          const std::vector<int>& perm,
                                          const std::vector<int>& signs) {
  const Matrix inv_t = inverse(m).transpose();
  HyperplaneArrangement out{ha.m, std::vector<Vector>(ha.coeffs.size()),
                            Vector(ha.coeffs.size())};
  for (std::size_t i = 0; i < ha.coeffs.size(); ++i) {
    const Vector a = inv_t * ha.coeffs[i];
    const FieldValue c = ha.constants[i] + dot(a, t);
    const FieldValue s(signs[i]);
    out.coeffs[perm[i]] = scale(a, s);
    out.constants[perm[i]] = s * c;
  }
  return out;
}

inline std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace hyparr::testing

#endif  // HYPARR_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_
