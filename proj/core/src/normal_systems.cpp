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


#include "hyparr/normal_systems.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <utility>

#include "hyparr/combinatorics.hpp"
#include "hyparr/cycles.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/parallel.hpp"

namespace hyparr {
namespace {

using Mask = std::uint32_t;

Mask mask_of(const std::vector<int>& labels) {
  Mask m = 0;
  for (int x : labels) m |= Mask{1} << x;
  return m;
}

void require_compatible(const NormalSystem& ns1, const NormalSystem& ns2) {
  if (ns1.m != ns2.m) throw DimensionError("normal systems of different dimension");
  if (ns1.size() != ns2.size()) throw DimensionError("normal systems of different size");
  for (const NormalSystem* ns : {&ns1, &ns2}) {
    const auto d = validate_normal_system(*ns);
    if (!d.valid) throw InvalidObjectError("invalid normal system: " + d.reason);
  }
  if (ns1.size() > 31) throw SizeGuardError("normal systems above 31 vectors");
}

// Coefficient signs of each member of every (m+1)-subset in the basis formed
// by the other members, computed by a linear solve per member.
class SignTable {
 public:
  explicit SignTable(const NormalSystem& ns)
      : n_(ns.size()), r_(ns.m + 1), subsets_(combinations(n_, r_)) {
    index_.assign(std::size_t{1} << n_, -1);
    signs_.resize(subsets_.size());
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      const auto& t = subsets_[s];
      index_[mask_of(t)] = static_cast<int>(s);
      signs_[s].assign(r_ * r_, 0);
      for (int a = 0; a < r_; ++a) {
        std::vector<Vector> basis;
        for (int b = 0; b < r_; ++b) {
          if (b != a) basis.push_back(ns.vectors[t[b]]);
        }
        const Vector lambda =
            solve(Matrix::from_rows(basis).transpose(), ns.vectors[t[a]]);
        for (int b = 0, c = 0; b < r_; ++b) {
          if (b == a) continue;
          signs_[s][a * r_ + b] = static_cast<signed char>(lambda[c++].sign());
        }
      }
    }
  }

  int size() const { return n_; }
  int width() const { return r_; }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  int index(Mask m) const { return index_[m]; }
  int sign(int s, int a, int b) const { return signs_[s][a * r_ + b]; }

 private:
  int n_;
  int r_;
  std::vector<std::vector<int>> subsets_;
  std::vector<int> index_;
  std::vector<std::vector<signed char>> signs_;
};

bool sign_patterns_match(const SignTable& t1, const SignTable& t2,
                         const std::vector<int>& perm,
                         const std::vector<int>& signs) {
  const int r = t1.width();
  std::vector<int> image(r);
  std::vector<int> pos(r);
  for (std::size_t s = 0; s < t1.subsets().size(); ++s) {
    const auto& t = t1.subsets()[s];
    Mask m = 0;
    for (int a = 0; a < r; ++a) {
      image[a] = perm[t[a]];
      m |= Mask{1} << image[a];
    }
    for (int a = 0; a < r; ++a) {
      pos[a] = 0;
      for (int b = 0; b < r; ++b) pos[a] += image[b] < image[a] ? 1 : 0;
    }
    const int s2 = t2.index(m);
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) {
        if (a == b) continue;
        const int want = signs[t[a]] * signs[t[b]] * t2.sign(s2, pos[a], pos[b]);
        if (t1.sign(static_cast<int>(s), a, b) != want) return false;
      }
    }
  }
  return true;
}

std::vector<IsoWitness> vacuous_witnesses(const NormalSystem& ns1,
                                          const NormalSystem& ns2) {
  const int n = ns1.size();
  std::vector<IsoWitness> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (Mask bits = 0; bits < (Mask{1} << n); ++bits) {
      IsoWitness w;
      w.perm = perm;
      for (int i = 0; i < n; ++i) w.signs.push_back((bits >> i) & 1 ? -1 : 1);
      w.flipped = orientation_flipped(w.bijection(), ns1, ns2);
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Signed vectors of a planar system in counterclockwise order starting from
// the positive x-axis; entries are (label, sign).
std::vector<std::pair<int, int>> circular_order(const NormalSystem& ns) {
  struct Entry {
    int label;
    int sign;
    FieldValue x;
    FieldValue y;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < ns.size(); ++i) {
    const auto& v = ns.vectors[i];
    entries.push_back({i, 1, v[0], v[1]});
    entries.push_back({i, -1, -v[0], -v[1]});
  }
  auto half = [](const Entry& e) {
    const int sy = e.y.sign();
    return (sy > 0 || (sy == 0 && e.x.sign() > 0)) ? 0 : 1;
  };
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha < hb;
    return (a.x * b.y - a.y * b.x).sign() > 0;
  });
  std::vector<std::pair<int, int>> out;
  for (const auto& e : entries) out.emplace_back(e.label, e.sign);
  return out;
}

std::vector<IsoWitness> planar_witnesses(const NormalSystem& ns1,
                                         const NormalSystem& ns2) {
  const auto c1 = circular_order(ns1);
  const auto c2 = circular_order(ns2);
  const int len = static_cast<int>(c1.size());
  const int n = ns1.size();
  std::vector<IsoWitness> out;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int r = 0; r < len; ++r) {
      IsoWitness w;
      w.perm.assign(n, -1);
      w.signs.assign(n, 1);
      w.flipped = reflect == 1;
      for (int t = 0; t < len; ++t) {
        const int u = reflect ? ((r - t) % len + len) % len : (t + r) % len;
        const auto [l1, s1] = c1[t];
        const auto [l2, s2] = c2[u];
        w.perm[l1] = l2;
        w.signs[l1] = s1 * s2;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Line-cycle tables indexed by (projection-set mask, point).
struct CycleTable {
  int n = 0;
  std::vector<std::vector<int>> plus;

  const std::vector<int>& at(Mask a, int j) const {
    return plus[static_cast<std::size_t>(a) * n + j];
  }
};

CycleTable build_cycle_table(const NormalSystem& ns, int jobs) {
  CycleTable t;
  t.n = ns.size();
  t.plus.resize((std::size_t{1} << t.n) * t.n);
  for (const auto& [key, cycle] : all_cycle_invariants(to_arrangement(ns), jobs)) {
    if (key.sign < 0) continue;
    t.plus[static_cast<std::size_t>(mask_of(key.a)) * t.n + key.j] = cycle.labels();
  }
  return t;
}

struct KeyInfo {
  std::vector<int> a;
  int j;
  Mask support;
  const std::vector<int>* cycle;
};

class CycleSearch {
 public:
  CycleSearch(const CycleTable& c1, const CycleTable& c2, int k)
      : c1_(c1), c2_(c2), n_(c1.n) {
    keys_by_level_.resize(n_);
    for (const auto& a : combinations(n_, k - 2)) {
      const Mask am = mask_of(a);
      for (int j = 0; j < n_; ++j) {
        if (am >> j & 1) continue;
        KeyInfo key{a, j, am | (Mask{1} << j), &c1.at(am, j)};
        const int top = 31 - std::countl_zero(key.support);
        keys_by_level_[top].push_back(std::move(key));
      }
    }
  }

  // Runs the search with branch sign s and pi(0) = first.
  std::vector<IsoWitness> run(int s, int first) {
    s_ = s;
    found_.clear();
    perm_.assign(n_, -1);
    signs_.assign(n_, 1);
    used_ = 0;
    for (int mu : {1, -1}) assign(0, first, mu);
    return found_;
  }

 private:
  void assign(int i, int target, int mu) {
    perm_[i] = target;
    signs_[i] = mu;
    used_ |= Mask{1} << target;
    if (consistent(i)) {
      if (i + 1 == n_) {
        found_.push_back(IsoWitness{perm_, signs_, s_ < 0});
      } else {
        for (int t = 0; t < n_; ++t) {
          if (used_ >> t & 1) continue;
          for (int m : {1, -1}) assign(i + 1, t, m);
        }
      }
    }
    used_ &= ~(Mask{1} << target);
    perm_[i] = -1;
  }

  bool consistent(int level) const {
    const Mask assigned = (level + 1 == 32) ? ~Mask{0} : ((Mask{1} << (level + 1)) - 1);
    for (int top = 0; top <= level; ++top) {
      for (const auto& key : keys_by_level_[top]) {
        if (!check(key, assigned)) return false;
      }
    }
    return true;
  }

  bool check(const KeyInfo& key, Mask assigned) const {
    const Mask others = assigned & ~key.support;
    if (std::popcount(others) < 3) return true;
    std::vector<int> image_a;
    image_a.reserve(key.a.size());
    int eps = s_ * signs_[key.j];
    Mask am2 = 0;
    for (int x : key.a) {
      image_a.push_back(perm_[x]);
      eps *= signs_[x];
      am2 |= Mask{1} << perm_[x];
    }
    eps *= sort_sign(image_a);
    Mask image_others = 0;
    std::vector<int> lhs;
    for (int x : *key.cycle) {
      if (others >> x & 1) {
        lhs.push_back(perm_[x]);
        image_others |= Mask{1} << perm_[x];
      }
    }
    if (eps < 0) std::reverse(lhs.begin(), lhs.end());
    std::vector<int> rhs;
    for (int y : c2_.at(am2, perm_[key.j])) {
      if (image_others >> y & 1) rhs.push_back(y);
    }
    if (rhs.size() != lhs.size()) return false;
    const auto start = std::find(lhs.begin(), lhs.end(), rhs[0]);
    if (start == lhs.end()) return false;
    const std::size_t offset = start - lhs.begin();
    for (std::size_t t = 0; t < rhs.size(); ++t) {
      if (lhs[(offset + t) % lhs.size()] != rhs[t]) return false;
    }
    return true;
  }

  const CycleTable& c1_;
  const CycleTable& c2_;
  int n_;
  std::vector<std::vector<KeyInfo>> keys_by_level_;
  int s_ = 1;
  std::vector<int> perm_;
  std::vector<int> signs_;
  Mask used_ = 0;
  std::vector<IsoWitness> found_;
};

}  // namespace

NormalSystemDiagnosis validate_normal_system(const NormalSystem& ns) {
  NormalSystemDiagnosis d;
  const int n = ns.size();
  if (ns.m < 1) {
    d.valid = false;
    d.reason = "dimension must be positive";
    return d;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ns.vectors[i].size()) != ns.m) {
      d.valid = false;
      d.violating = {i};
      d.reason = "vector has wrong dimension";
      return d;
    }
    if (is_zero(ns.vectors[i])) {
      d.valid = false;
      d.violating = {i};
      d.reason = "zero vector";
      return d;
    }
  }
  // Distinct lines; only an extra condition when m = 1.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rank(Matrix::from_rows({ns.vectors[i], ns.vectors[j]})) < 2) {
        d.valid = false;
        d.violating = {i, j};
        d.reason = "parallel vectors";
        return d;
      }
    }
  }
  for (const auto& subset : combinations(n, std::min(ns.m, n))) {
    std::vector<Vector> rows;
    for (int i : subset) rows.push_back(ns.vectors[i]);
    if (rank(Matrix::from_rows(rows)) != subset.size()) {
      d.valid = false;
      d.violating = subset;
      d.reason = "linearly dependent subset";
      return d;
    }
  }
  return d;
}

AntipodalArrangement to_arrangement(const NormalSystem& ns) {
  AntipodalArrangement arr;
  arr.k = ns.m - 1;
  for (const auto& v : ns.vectors) arr.points.push_back(SpherePoint::canonicalize(v));
  return arr;
}

bool witness_less(const IsoWitness& x, const IsoWitness& y) {
  if (x.flipped != y.flipped) return !x.flipped;
  if (x.perm != y.perm) return x.perm < y.perm;
  // + sorts before -.
  for (std::size_t i = 0; i < x.signs.size() && i < y.signs.size(); ++i) {
    if (x.signs[i] != y.signs[i]) return x.signs[i] > y.signs[i];
  }
  return x.signs.size() < y.signs.size();
}

void sort_witnesses(std::vector<IsoWitness>* ws) {
  std::sort(ws->begin(), ws->end(), witness_less);
}

SignedBijection compose(const SignedBijection& first,
                        const SignedBijection& second) {
  const std::size_t n = first.perm.size();
  SignedBijection out{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[i] = second.perm[first.perm[i]];
    out.signs[i] = first.signs[i] * second.signs[first.perm[i]];
  }
  return out;
}

SignedBijection invert(const SignedBijection& b) {
  const std::size_t n = b.perm.size();
  SignedBijection out{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[b.perm[i]] = static_cast<int>(i);
    out.signs[b.perm[i]] = b.signs[i];
  }
  return out;
}

SignedBijection identity_bijection(int n) {
  SignedBijection b{std::vector<int>(n), std::vector<int>(n, 1)};
  std::iota(b.perm.begin(), b.perm.end(), 0);
  return b;
}

bool orientation_flipped(const SignedBijection& b, const NormalSystem& ns1,
                         const NormalSystem& ns2) {
  const int m = ns1.m;
  if (ns1.size() < m) return false;
  std::vector<Vector> src;
  std::vector<Vector> dst;
  for (int i = 0; i < m; ++i) {
    src.push_back(ns1.vectors[i]);
    Vector v = ns2.vectors[b.perm[i]];
    if (b.signs[i] < 0) {
      for (auto& x : v) x = -x;
    }
    dst.push_back(std::move(v));
  }
  return det(Matrix::from_rows(src)).sign() != det(Matrix::from_rows(dst)).sign();
}

bool is_convex_positive_bijection(const SignedBijection& b,
                                  const NormalSystem& ns1,
                                  const NormalSystem& ns2) {
  require_compatible(ns1, ns2);
  const int n = ns1.size();
  if (static_cast<int>(b.perm.size()) != n || static_cast<int>(b.signs.size()) != n) {
    throw DimensionError("bijection size does not match the systems");
  }
  std::vector<int> seen(n, 0);
  for (int x : b.perm) {
    if (x < 0 || x >= n || seen[x]++) throw InvalidObjectError("not a permutation");
  }
  if (n <= ns1.m) return true;
  const SignTable t1(ns1);
  const SignTable t2(ns2);
  return sign_patterns_match(t1, t2, b.perm, b.signs);
}

bool is_convex_positive_bijection(const IsoWitness& w, const NormalSystem& ns1,
                                  const NormalSystem& ns2) {
  return is_convex_positive_bijection(w.bijection(), ns1, ns2);
}

std::vector<IsoWitness> find_isomorphisms(const NormalSystem& ns1,
                                          const NormalSystem& ns2,
                                          const SearchOptions& options) {
  require_compatible(ns1, ns2);
  const int n = ns1.size();
  const int m = ns1.m;
  std::vector<IsoWitness> out;
  if (n <= m) {
    if (n > 8) throw SizeGuardError("vacuous witness enumeration above 8 vectors");
    out = vacuous_witnesses(ns1, ns2);
  } else if (m == 2) {
    out = planar_witnesses(ns1, ns2);
  } else {
    if (n > 16) throw SizeGuardError("cycle search above 16 vectors");
    const CycleTable c1 = build_cycle_table(ns1, options.jobs);
    const CycleTable c2 = build_cycle_table(ns2, options.jobs);
    const int k = m - 1;
    std::vector<std::vector<IsoWitness>> parts(2 * n);
    parallel_for(parts.size(), options.jobs, [&](std::size_t task) {
      CycleSearch search(c1, c2, k);
      const int s = task < static_cast<std::size_t>(n) ? 1 : -1;
      parts[task] = search.run(s, static_cast<int>(task % n));
    });
    for (auto& p : parts) {
      out.insert(out.end(), std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
    }
  }
  sort_witnesses(&out);
  return out;
}

std::vector<IsoWitness> oracle_isomorphisms(const NormalSystem& ns1,
                                            const NormalSystem& ns2,
                                            const SearchOptions& options) {
  require_compatible(ns1, ns2);
  const int n = ns1.size();
  if (n > kOracleMaxSize) {
    throw SizeGuardError("oracle search is limited to " +
                         std::to_string(kOracleMaxSize) + " vectors");
  }
  if (n <= ns1.m) {
    auto out = vacuous_witnesses(ns1, ns2);
    sort_witnesses(&out);
    return out;
  }
  const SignTable t1(ns1);
  const SignTable t2(ns2);
  std::vector<std::vector<IsoWitness>> parts(n);
  parallel_for(parts.size(), options.jobs, [&](std::size_t first) {
    std::vector<int> rest;
    for (int x = 0; x < n; ++x) {
      if (x != static_cast<int>(first)) rest.push_back(x);
    }
    std::vector<int> perm(n);
    std::vector<int> signs(n);
    do {
      perm[0] = static_cast<int>(first);
      std::copy(rest.begin(), rest.end(), perm.begin() + 1);
      for (Mask bits = 0; bits < (Mask{1} << n); ++bits) {
        for (int i = 0; i < n; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
        if (!sign_patterns_match(t1, t2, perm, signs)) continue;
        IsoWitness w{perm, signs, false};
        w.flipped = orientation_flipped(w.bijection(), ns1, ns2);
        parts[first].push_back(std::move(w));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  std::vector<IsoWitness> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_witnesses(&out);
  return out;
}

}  // namespace hyparr
