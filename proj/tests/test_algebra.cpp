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


#include <gtest/gtest.h>

#include <random>

#include "hopfq8/wedderburn.hpp"

namespace hopfq8 {
namespace {

TEST(LinearAlgebra, KernelAndRank) {
  const Mat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m, 3), 2u);
  const Mat k = kernel(m, 3);
  ASSERT_EQ(k.size(), 1u);
  for (const auto& row : m) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 3; ++i) dot += row[i] * k[0][i];
    EXPECT_EQ(dot, 0);
  }
  EXPECT_EQ(kernel(Mat{{1, 0}, {0, 1}}, 2).size(), 0u);
}

TEST(LinearAlgebra, Coordinates) {
  const Mat basis{{1, 1, 0}, {0, 1, 1}};
  EXPECT_EQ(*coordinates(basis, {2, 5, 3}), (Vec{2, 3}));
  EXPECT_FALSE(coordinates(basis, {1, 0, 0}).has_value());
  const Subspace sub(basis, 3);
  EXPECT_EQ(sub.dim(), 2u);
  EXPECT_TRUE(sub.contains({2, 5, 3}));
  EXPECT_FALSE(sub.contains({1, 0, 0}));
}

TEST(Polynomials, DivisionAndInverse) {
  const Poly f(Vec{-2, 0, 1}), g(Vec{1, 1});
  const auto [q, r] = divmod(f, g);
  EXPECT_EQ(q * g + r, f);
  EXPECT_EQ(r, Poly::constant(-1));
  const Poly inv = inverse_mod(g, f);
  EXPECT_EQ((inv * g) % f, Poly::constant(1));
  EXPECT_EQ(gcd(f * g, g * g), g);
  EXPECT_FALSE(is_squarefree(g * g));
  EXPECT_EQ(Poly(Vec{Rational(1, 2), -3, 1}).to_string(), "x^2 - 3*x + 1/2");
}

TEST(Polynomials, FactorRecoversRandomProducts) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> parts;
    Poly f = Poly::constant(1);
    const int count = 1 + trial % 4;
    for (int i = 0; i < count; ++i) {
      // x - r or x^2 + p x + q with negative discriminant (irreducible)
      Poly p;
      if (i % 2 == 0) {
        p = Poly(Vec{Rational(coef(rng), 1 + trial % 3), 1});
      } else {
        const int pc = coef(rng);
        p = Poly(Vec{Rational(pc * pc + 1 + trial), pc, 1});
      }
      if (gcd(f, p).degree() > 0) continue;
      parts.push_back(p);
      f = f * p;
    }
    auto factors = factor_squarefree(f);
    std::sort(parts.begin(), parts.end(), [](const Poly& a, const Poly& b) {
      return a.degree() != b.degree() ? a.degree() < b.degree() : a.coeffs() < b.coeffs();
    });
    EXPECT_EQ(factors, parts) << f.to_string();
  }
}

TEST(Polynomials, IrreducibleQuarticStaysWhole) {
  const Poly f(Vec{1, 0, -10, 0, 1});  // minimal polynomial of sqrt 2 + sqrt 3
  const auto factors = factor_squarefree(f);
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0], f);
  EXPECT_THROW(factor_squarefree(Poly(Vec{1, 2, 1})), InputError);
}

/// The quaternion algebra (x, y) on basis 1, i, j, k.
StructureAlgebra quaternion_algebra(const Rational& x, const Rational& y) {
  std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, zero_vec(4)));
  auto set = [&](int i, int j, const Rational& c, int k) { t[i][j][k] = c; };
  for (int i = 0; i < 4; ++i) {
    set(0, i, 1, i);
    set(i, 0, 1, i);
  }
  set(1, 1, x, 0);
  set(2, 2, y, 0);
  set(3, 3, -x * y, 0);
  set(1, 2, 1, 3);
  set(2, 1, -1, 3);
  set(1, 3, x, 2);
  set(3, 1, -x, 2);
  set(2, 3, -y, 1);
  set(3, 2, y, 1);
  return StructureAlgebra({"1", "i", "j", "k"}, t, unit_vec(4, 0));
}

TEST(StructureAlgebra, QuaternionAxioms) {
  for (auto [x, y] : {std::pair{-1, -1}, std::pair{-1, 2}, std::pair{3, -7}}) {
    const auto Q = quaternion_algebra(x, y);
    EXPECT_TRUE(Q.is_associative());
    EXPECT_TRUE(Q.unit_is_identity());
    EXPECT_FALSE(Q.is_commutative());
    EXPECT_EQ(Q.center().size(), 1u);
  }
}

TEST(Decompose, QuaternionAlgebras) {
  EXPECT_EQ(decompose(quaternion_algebra(-1, -1)).descriptor.to_string(), "H{2,inf}");
  EXPECT_EQ(decompose(quaternion_algebra(-1, 2)).descriptor.to_string(), "M2(Q)");
  EXPECT_EQ(decompose(quaternion_algebra(-1, 11)).descriptor.to_string(), "H{2,11}");
  EXPECT_EQ(decompose(quaternion_algebra(1, 5)).descriptor.to_string(), "M2(Q)");
}

/// Q[x]/(f) on the power basis.
StructureAlgebra field_algebra(const Poly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = zero_vec(i + j + 1);
      c[i + j] = 1;
      const Poly r = Poly(c) % f;
      Vec v = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = r[k];
      t[i][j] = v;
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x^" + std::to_string(i));
  return StructureAlgebra(labels, t, unit_vec(n, 0));
}

TEST(Decompose, EtaleAlgebras) {
  // (x^2 - 2)(x^2 - 8) splits as two copies of Q(sqrt 2)
  EXPECT_EQ(decompose(field_algebra(Poly(Vec{-2, 0, 1}) * Poly(Vec{-8, 0, 1}))).descriptor.to_string(),
            "Q(sqrt(2))^2");
  EXPECT_EQ(decompose(field_algebra(Poly(Vec{1, 0, -10, 0, 1}))).descriptor.to_string(), "Q(sqrt(2),sqrt(3))");
  EXPECT_EQ(decompose(field_algebra(Poly(Vec{0, -1, 0, 1}))).descriptor.to_string(), "Q^3");
  // x^4 - 2 generates a non-Galois quartic field
  const auto d = decompose(field_algebra(Poly(Vec{-2, 0, 0, 0, 1}))).descriptor;
  EXPECT_NE(std::find(d.flags.begin(), d.flags.end(), "unrecognized_field"), d.flags.end());
}

TEST(Descriptor, TensorRules) {
  // distinct independent classes give a biquadratic field, dependent ones copies
  EXPECT_EQ(to_string(tensor_of_quadratics({SquareClass(2), SquareClass(3)})), "Q(sqrt(2),sqrt(3))");
  EXPECT_EQ(to_string(tensor_of_quadratics({SquareClass(-2), SquareClass(-2)})), "Q(sqrt(-2))^2");
  EXPECT_EQ(to_string(tensor_of_quadratics({SquareClass(1)})), "Q^2");
  EXPECT_EQ(to_string(tensor_of_quadratics({SquareClass(-1)})), "Q(sqrt(-1))");
  AlgebraDescriptor d;
  d.blocks = {field_block({}, 2), quaternion_block(SquareClass(-1), SquareClass(-1)), field_block({}, 2)};
  d.normalize();
  EXPECT_EQ(d.to_string(), "Q^4 x H{2,inf}");
  EXPECT_EQ(d.dimension(), 8);
}

}  // namespace
}  // namespace hopfq8
