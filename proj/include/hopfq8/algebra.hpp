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


// Finite-dimensional associative algebras over Q given by structure constants.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfq8/poly.hpp"

namespace hopfq8 {

class StructureAlgebra {
 public:
  /// table[i][j] holds the coordinates of e_i e_j.
  StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> table, Vec unit)
      : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n || unit_.size() != n) throw InputError("structure constants have the wrong shape");
    for (const auto& row : table_) {
      if (row.size() != n) throw InputError("structure constants have the wrong shape");
      for (const auto& v : row) {
        if (v.size() != n) throw InputError("structure constants have the wrong shape");
      }
    }
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const Vec& product_of_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        const Rational c = x[i] * y[j];
        const Vec& e = table_[i][j];
        for (std::size_t k = 0; k < dim(); ++k) {
          if (e[k] != 0) out[k] += c * e[k];
        }
      }
    }
    return out;
  }

  bool is_associative() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t k = 0; k < dim(); ++k) {
          const Vec ei = unit_vec(dim(), i), ek = unit_vec(dim(), k);
          if (mul(table_[i][j], ek) != mul(ei, table_[j][k])) return false;
        }
      }
    }
    return true;
  }

  bool unit_is_identity() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      const Vec e = unit_vec(dim(), i);
      if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
    }
    return true;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        if (table_[i][j] != table_[j][i]) return false;
      }
    }
    return true;
  }

  /// Basis of the center, as coordinate vectors.
  Mat center() const {
    // x is central iff sum_i x_i (e_i e_j - e_j e_i) = 0 for every j
    Mat rows;
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        Vec row = zero_vec(dim());
        for (std::size_t i = 0; i < dim(); ++i) row[i] = table_[i][j][k] - table_[j][i][k];
        rows.push_back(std::move(row));
      }
    }
    return kernel(rows, dim());
  }

  Vec eval(const Poly& p, const Vec& x) const {
    Vec acc = zero_vec(dim());
    for (int i = p.degree(); i >= 0; --i) acc = mul(acc, x) + p[static_cast<std::size_t>(i)] * unit_;
    return acc;
  }

  /// Minimal polynomial of x, from the first linear dependency among its powers.
  Poly min_poly(const Vec& x) const {
    Mat powers{unit_};
    for (std::size_t d = 1; d <= dim() + 1; ++d) {
      const Vec next = mul(powers.back(), x);
      if (auto c = coordinates(powers, next)) {
        Vec coeffs = Rational(-1) * *c;
        coeffs.push_back(1);
        return Poly(std::move(coeffs));
      }
      powers.push_back(next);
    }
    throw InputError("min_poly: no dependency found");
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
};

/// The subalgebra spanned by basis inside an ambient algebra, with structure
/// constants in that basis. Throws if the span is not closed.
inline StructureAlgebra restrict_to(const std::function<Vec(const Vec&, const Vec&)>& ambient_mul, const Mat& basis,
                                    const Vec& ambient_unit, std::vector<std::string> labels) {
  if (labels.size() != basis.size()) throw InputError("restrict_to: label count mismatch");
  std::vector<std::vector<Vec>> table(basis.size(), std::vector<Vec>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = coordinates(basis, ambient_mul(basis[i], basis[j]));
      if (!c) throw VerificationError("restrict_to: span is not closed under multiplication");
      table[i][j] = std::move(*c);
    }
  }
  auto unit = coordinates(basis, ambient_unit);
  if (!unit) throw VerificationError("restrict_to: span does not contain the unit");
  return StructureAlgebra(std::move(labels), std::move(table), std::move(*unit));
}

}  // namespace hopfq8
