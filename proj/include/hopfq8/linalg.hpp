// Copyright 2026 The hopfq8 Authors
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


// Exact linear algebra over Q on dense row-major matrices.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfq8/rational.hpp"

namespace hopfq8 {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Rational& c, Vec v) {
  for (auto& x : v) x *= c;
  return v;
}

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Mat rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

inline Echelon rref(Mat m, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < ncols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

inline std::size_t rank(const Mat& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline Mat kernel(const Mat& m, std::size_t ncols) {
  const Echelon e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates of v in the span of the (independent) rows of basis, if v lies in it.
inline std::optional<Vec> coordinates(const Mat& basis, const Vec& v) {
  const std::size_t n = v.size(), k = basis.size();
  // solve basis^T c = v via the augmented system
  Mat aug(n, zero_vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = v[i];
  }
  const Echelon e = rref(std::move(aug), k + 1);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (e.pivots.size() != k) throw InputError("coordinates: basis rows are dependent");
  Vec c = zero_vec(k);
  for (std::size_t i = 0; i < k; ++i) c[e.pivots[i]] = e.rows[i][k];
  return c;
}

/// Fast coordinate map for a fixed subspace, using its echelon basis.
class Subspace {
 public:
  Subspace(const Mat& spanning, std::size_t ambient) : ambient_(ambient) {
    auto e = rref(spanning, ambient);
    basis_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Mat& basis() const { return basis_; }

  std::optional<Vec> coords(const Vec& v) const {
    Vec c(dim());
    Vec rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = v[pivots_[i]];
      if (c[i] != 0) rest = rest - c[i] * basis_[i];
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
  }

  bool contains(const Vec& v) const { return coords(v).has_value(); }

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hopfq8
