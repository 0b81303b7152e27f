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

#include "hopfq8/field_arith.hpp"
#include "hopfq8/oracles.hpp"

namespace hopfq8 {
namespace {

const std::vector<Place> kTestPlaces = [] {
  std::vector<Place> v{kInfinity, 2};
  for (Place p = 3; p <= 50; p += 2) {
    if (is_prime(p)) v.push_back(p);
  }
  return v;
}();

TEST(SquareClass, ReductionAndProduct) {
  EXPECT_EQ(SquareClass(12).rep(), 3);
  EXPECT_EQ(SquareClass(-50).rep(), -2);
  EXPECT_EQ(SquareClass(Rational(3, 4)).rep(), 3);
  EXPECT_EQ(SquareClass(Rational(2, 3)).rep(), 6);
  EXPECT_EQ((SquareClass(6) * SquareClass(10)).rep(), 15);
  EXPECT_TRUE((SquareClass(-7) * SquareClass(-7)).is_trivial());
  EXPECT_THROW(SquareClass(0), InputError);
  for (std::int64_t x = -20; x <= 20; ++x) {
    for (std::int64_t y = -20; y <= 20; ++y) {
      if (x == 0 || y == 0) continue;
      const SquareClass a(x), b(y);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * b, SquareClass(x * y));
      EXPECT_TRUE((a * a).is_trivial());
    }
  }
}

TEST(Hilbert, Examples) {
  for (Place v : kTestPlaces) {
    EXPECT_EQ(hilbert_symbol(-1, 2, v), 1) << v;
    for (std::int64_t y : {-7, 3, 22, 50}) EXPECT_EQ(hilbert_symbol(1, y, v), 1);
  }
  EXPECT_EQ(hilbert_symbol(-1, 11, 11), -1);
  EXPECT_EQ(oracle::brute_force_hilbert(-1, 11, 11), -1);
  EXPECT_THROW(hilbert_symbol(2, 3, 9), InputError);
  EXPECT_THROW(hilbert_symbol(0, 3, 3), InputError);
}

TEST(Hilbert, SymmetricAndBimultiplicative) {
  for (Place v : kTestPlaces) {
    for (std::int64_t x = -30; x <= 30; ++x) {
      if (x == 0) continue;
      for (std::int64_t y = -30; y <= 30; ++y) {
        if (y == 0) continue;
        const int xy = hilbert_symbol(x, y, v);
        ASSERT_EQ(xy, hilbert_symbol(y, x, v));
        for (std::int64_t z = -30; z <= 30; ++z) {
          if (z == 0) continue;
          ASSERT_EQ(hilbert_symbol(x, y * z, v), xy * hilbert_symbol(x, z, v)) << x << " " << y << " " << z << " @" << v;
        }
      }
    }
  }
}

TEST(Hilbert, ProductFormulaAndEvenRamification) {
  for (std::int64_t x = -50; x <= 50; ++x) {
    for (std::int64_t y = -50; y <= 50; ++y) {
      if (x == 0 || y == 0) continue;
      int prod = 1;
      for (Place v : oracle::relevant_places(x, y)) prod *= hilbert_symbol(x, y, v);
      ASSERT_EQ(prod, 1) << x << " " << y;
      ASSERT_EQ(ramification_set(x, y).size() % 2, 0u);
    }
  }
}

TEST(Hilbert, ClosedFormMatchesBruteForceSmallRange) {
  // the full |x|,|y| <= 50 sweep runs in the acceptance binary
  for (std::int64_t x = -20; x <= 20; ++x) {
    for (std::int64_t y = -20; y <= 20; ++y) {
      if (x == 0 || y == 0) continue;
      for (Place v : oracle::relevant_places(x, y)) {
        ASSERT_EQ(hilbert_symbol(x, y, v), oracle::brute_force_hilbert(x, y, v)) << x << " " << y << " @" << v;
      }
    }
  }
}

TEST(Ramification, Examples) {
  EXPECT_EQ(ramification_set(-1, -1), (std::vector<Place>{2, kInfinity}));
  EXPECT_EQ(ramification_set(-1, 11), (std::vector<Place>{2, 11}));
  EXPECT_TRUE(ramification_set(-1, 2).empty());
  EXPECT_EQ(places_string(ramification_set(-1, -1)), "{2,inf}");
  EXPECT_EQ(places_string({}), "{}");
}

TEST(Quaternion, Isomorphism) {
  EXPECT_TRUE(quat_isomorphic({-11, -2}, {-1, -1}));
  EXPECT_FALSE(quat_isomorphic({-1, 11}, {-1, 66}));
  EXPECT_TRUE(quat_isomorphic({-1, 11}, {-1, 22}));
  EXPECT_TRUE(quat_isomorphic({7, -5}, {7, -5}));
  EXPECT_TRUE(QuaternionClass(-1, 2).is_split());
  EXPECT_FALSE(QuaternionClass(-1, 6).is_split());
}

TEST(Quaternion, BiconditionalInstances) {
  const auto r1 = lemma_4_10_check(SquareClass(11), SquareClass(2));
  EXPECT_TRUE(r1.left);
  EXPECT_TRUE(r1.right);
  const auto r2 = lemma_4_10_check(SquareClass(11), SquareClass(6));
  EXPECT_FALSE(r2.left);
  EXPECT_FALSE(r2.right);
  const auto r3 = lemma_4_10_check(SquareClass(1), SquareClass(1));
  EXPECT_TRUE(r3.left && r3.right);
  for (std::int64_t x = -30; x <= 30; ++x) {
    for (std::int64_t y = -30; y <= 30; ++y) {
      if (x == 0 || y == 0) continue;
      EXPECT_TRUE(lemma_4_10_check(SquareClass(x), SquareClass(y)).agree()) << x << " " << y;
    }
  }
}

TEST(Forms, Equivalence) {
  const TernaryForm sum3({1, 1, 1});
  EXPECT_TRUE(forms_equivalent(TernaryForm({11, 2, 22}), sum3));
  EXPECT_TRUE(forms_equivalent(TernaryForm({11, 6, 66}), sum3));
  for (std::int64_t b : {2, 3, 5, 7}) EXPECT_FALSE(forms_equivalent(TernaryForm({-1, b, -b}), sum3));
  // Q(sqrt2, sqrt3) embeds in a quaternionic field; Q(sqrt3, sqrt5) fails at 3
  EXPECT_TRUE(forms_equivalent(TernaryForm({2, 3, 6}), sum3));
  EXPECT_FALSE(forms_equivalent(TernaryForm({3, 5, 15}), sum3));
  EXPECT_THROW(TernaryForm({0, 1, 1}), InputError);
  EXPECT_EQ(TernaryForm({-1, 2, 3}).signature(), (std::pair<int, int>{2, 1}));
}

TEST(Forms, WittEmbeddability) {
  EXPECT_TRUE(witt_embeddable(SquareClass(11), SquareClass(2)));
  EXPECT_TRUE(witt_embeddable(SquareClass(11), SquareClass(6)));
  EXPECT_FALSE(witt_embeddable(SquareClass(-1), SquareClass(5)));
  EXPECT_THROW(witt_embeddable(SquareClass(4), SquareClass(2)), InputError);
  EXPECT_THROW(witt_embeddable(SquareClass(3), SquareClass(12)), InputError);
}

TEST(Forms, EmbeddablePairsGiveDefiniteQuaternionClass) {
  int embeddable = 0;
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (std::int64_t b = 2; b <= 60; ++b) {
      const SquareClass A(a), B(b);
      if (A.is_trivial() || B.is_trivial() || (A * B).is_trivial()) continue;
      if (!witt_embeddable(A, B)) continue;
      ++embeddable;
      EXPECT_EQ(ramification_set(-a, -b), (std::vector<Place>{2, kInfinity})) << a << " " << b;
      // cancelling the class of (-a,-b) = (-1,-1) leaves (-a,b) = (-1,a)
      EXPECT_EQ(ramification_set(-a, b), ramification_set(-1, a)) << a << " " << b;
    }
  }
  EXPECT_GT(embeddable, 50);
}

TEST(SquareInQuadratic, Examples) {
  EXPECT_FALSE(square_in_quadratic(SquareClass(-1), SquareClass(11)));
  EXPECT_TRUE(square_in_quadratic(SquareClass(-2), SquareClass(-2)));
  EXPECT_TRUE(square_in_quadratic(SquareClass(1), SquareClass(7)));
  EXPECT_TRUE(square_in_quadratic(SquareClass(12), SquareClass(3)));
  EXPECT_THROW(square_in_quadratic(SquareClass(2), SquareClass(9)), InputError);
}

}  // namespace
}  // namespace hopfq8
