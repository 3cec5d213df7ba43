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


#include "hyparr/fourier_motzkin.hpp"

#include <algorithm>
#include <bitset>
#include <string>
#include <utility>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

constexpr std::size_t kMaxRows = 512;
using History = std::bitset<kMaxRows>;

// g . x >= b.
struct Row {
  Vector g;
  FieldValue b;
  History history;
};

// Scales so the first nonzero coefficient is +-1; keeps the direction.
void normalize(Row* row) {
  for (const auto& c : row->g) {
    if (c.is_zero()) continue;
    const FieldValue s = c.abs().inverse();
    for (auto& x : row->g) x *= s;
    row->b *= s;
    return;
  }
}

bool same_row(const Row& x, const Row& y) { return x.g == y.g && x.b == y.b; }

// Rows of stage k constrain variables k..dim-1; returns false on an
// infeasible constant row.
bool eliminate(const std::vector<Row>& in, std::size_t var, std::size_t eliminated,
               std::vector<Row>* out) {
  std::vector<const Row*> pos;
  std::vector<const Row*> neg;
  out->clear();
  for (const auto& r : in) {
    const int s = r.g[var].sign();
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      out->push_back(r);
    }
  }
  for (const Row* p : pos) {
    for (const Row* q : neg) {
      History h = p->history | q->history;
      if (h.count() > eliminated + 1) continue;
      const FieldValue a = -q->g[var];
      const FieldValue c = p->g[var];
      Row r;
      r.g.resize(p->g.size());
      for (std::size_t j = 0; j < r.g.size(); ++j) {
        r.g[j] = p->g[j] * a + q->g[j] * c;
      }
      r.g[var] = FieldValue::zero(c.tag());
      r.b = p->b * a + q->b * c;
      r.history = h;
      normalize(&r);
      out->push_back(std::move(r));
    }
  }
  std::vector<Row> kept;
  kept.reserve(out->size());
  for (auto& r : *out) {
    if (is_zero(r.g)) {
      if (r.b.sign() > 0) return false;
      continue;
    }
    const bool dup = std::any_of(kept.begin(), kept.end(),
                                 [&](const Row& k) { return same_row(k, r); });
    if (!dup) kept.push_back(std::move(r));
  }
  *out = std::move(kept);
  return true;
}

FeasibilityResult solve_nonstrict(std::vector<Row> rows, std::size_t dim,
                                  FieldTag tag) {
  FeasibilityResult result;
  if (rows.size() > kMaxRows) throw SizeGuardError("too many inequalities");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].history.reset();
    rows[i].history.set(i);
    normalize(&rows[i]);
  }
  std::vector<std::vector<Row>> stages{std::move(rows)};
  {
    // Constant rows present from the start.
    std::vector<Row> first;
    for (auto& r : stages[0]) {
      if (is_zero(r.g)) {
        if (r.b.sign() > 0) return result;
        continue;
      }
      first.push_back(std::move(r));
    }
    stages[0] = std::move(first);
  }
  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<Row> next;
    if (!eliminate(stages.back(), var, var + 1, &next)) return result;
    stages.push_back(std::move(next));
  }
  // Back-substitution from the last variable.
  Vector x(dim, FieldValue::zero(tag));
  for (std::size_t k = dim; k-- > 0;) {
    bool has_lo = false;
    bool has_hi = false;
    FieldValue lo;
    FieldValue hi;
    for (const auto& r : stages[k]) {
      const int s = r.g[k].sign();
      if (s == 0) continue;
      FieldValue rest = r.b;
      for (std::size_t j = k + 1; j < dim; ++j) rest -= r.g[j] * x[j];
      const FieldValue bound = rest / r.g[k];
      if (s > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      if (lo > hi) throw Error("Fourier-Motzkin back-substitution failed");
      x[k] = (lo + hi) / FieldValue::from_int(tag, 2);
    } else if (has_lo) {
      x[k] = lo;
    } else if (has_hi) {
      x[k] = hi;
    }
  }
  result.feasible = true;
  result.point = std::move(x);
  return result;
}

}  // namespace

FeasibilityResult fm_feasible(const std::vector<LinearInequality>& rows,
                              std::size_t dim, FieldTag tag) {
  for (const auto& r : rows) {
    if (r.coeffs.size() != dim) throw DimensionError("inequality has wrong length");
  }
  const bool any_strict =
      std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.strict; });
  if (!any_strict) {
    std::vector<Row> plain;
    for (const auto& r : rows) plain.push_back(Row{r.coeffs, r.rhs, {}});
    return solve_nonstrict(std::move(plain), dim, tag);
  }
  const FieldValue zero = FieldValue::zero(tag);
  const FieldValue one = FieldValue::one(tag);
  std::vector<Row> hom;
  for (const auto& r : rows) {
    Row h;
    h.g = r.coeffs;
    h.g.push_back(-r.rhs);
    h.b = r.strict ? one : zero;
    hom.push_back(std::move(h));
  }
  Row t_row;
  t_row.g.assign(dim + 1, zero);
  t_row.g[dim] = one;
  t_row.b = one;
  hom.push_back(std::move(t_row));
  FeasibilityResult h = solve_nonstrict(std::move(hom), dim + 1, tag);
  if (!h.feasible) return h;
  FeasibilityResult out;
  out.feasible = true;
  const FieldValue t_inv = h.point[dim].inverse();
  for (std::size_t j = 0; j < dim; ++j) out.point.push_back(h.point[j] * t_inv);
  for (const auto& r : rows) {
    const int s = (dot(r.coeffs, out.point) - r.rhs).sign();
    if (s < 0 || (r.strict && s == 0)) {
      throw Error("Fourier-Motzkin witness violates an inequality");
    }
  }
  return out;
}

}  // namespace hyparr
