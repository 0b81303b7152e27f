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

#include "hopfq8/group.hpp"
#include "hopfq8/named.hpp"

namespace hopfq8 {
namespace {

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::span<const int>(img));
}

std::vector<Perm> conjugate_set(const std::vector<Perm>& N, const Perm& g) {
  std::vector<Perm> out;
  for (const auto& p : N) out.push_back(p.conjugated_by(g));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Q8Preset, ProductsFollowNormalForm) {
  const auto G = q8_preset();
  EXPECT_EQ(G.mul(1, 1), 2);
  EXPECT_EQ(G.mul(1, 4), 5);
  EXPECT_EQ(G.mul(4, 1), 7);
  EXPECT_EQ(G.identity(), 0);
  EXPECT_EQ(G.power(4, 2), G.power(1, 2));
  EXPECT_EQ(G.name(q8_index(3, 1)), "s^3t");
  EXPECT_EQ(classify_type(G), GroupType::Q8);
}

TEST(RegularRepresentations, CycleForms) {
  const auto G = q8_preset();
  EXPECT_EQ(lambda_of(G, 1).cycle_string(), "(0 1 2 3)(4 5 6 7)");
  EXPECT_EQ(rho_of(G, 1).cycle_string(), "(0 3 2 1)(4 5 6 7)");
  EXPECT_EQ(rho_of(G, 2), lambda_of(G, 2));
}

TEST(RegularRepresentations, CommuteAndAreHomomorphisms) {
  const auto G = q8_preset();
  for (int g = 0; g < 8; ++g) {
    for (int h = 0; h < 8; ++h) {
      EXPECT_EQ(lambda_of(G, g) * rho_of(G, h), rho_of(G, h) * lambda_of(G, g));
      EXPECT_EQ(lambda_of(G, G.mul(g, h)), lambda_of(G, g) * lambda_of(G, h));
      EXPECT_EQ(rho_of(G, G.mul(g, h)), rho_of(G, g) * rho_of(G, h));
    }
  }
  EXPECT_THROW(lambda_of(G, 8), InputError);
  EXPECT_THROW(rho_of(G, -1), InputError);
}

TEST(Closure, Examples) {
  const auto G = q8_preset();
  EXPECT_EQ(closure({Perm::identity(8)}).size(), 1u);
  const auto A = closure({lambda_of(G, 1), rho_of(G, 4)});
  ASSERT_EQ(A.size(), 8u);
  EXPECT_EQ(classify_type(A), GroupType::C4xC2);
  const auto C = closure({eta(G, Symbol::Sigma, Symbol::Tau)});
  ASSERT_EQ(C.size(), 8u);
  EXPECT_EQ(classify_type(C), GroupType::C8);
  EXPECT_THROW(closure({}), InputError);
  EXPECT_THROW(closure({lambda_of(G, 1), rho_of(G, 4)}, 4), ClosureCapExceeded);
}

TEST(Regularity, Examples) {
  const auto G = q8_preset();
  EXPECT_TRUE(is_regular(rho_image(G), 8));
  const auto stab = closure({lambda_of(G, 1)});
  const auto cert = regularity(stab, 8);
  EXPECT_FALSE(cert.full_order);
  EXPECT_FALSE(cert.regular());
  EXPECT_TRUE(is_regular(closure({eta(G, Symbol::Sigma, Symbol::Tau)}), 8));
  EXPECT_THROW(regularity({lambda_of(G, 1)}, 8), InputError);
}

TEST(Regularity, TwoPropertiesImplyTheThird) {
  // random conjugates of order-8 subgroups, both regular and not
  std::vector<std::vector<Perm>> seeds{
      closure({Perm{1, 0, 3, 2, 5, 4, 7, 6}, Perm{2, 3, 0, 1, 6, 7, 4, 5}, Perm{4, 5, 6, 7, 0, 1, 2, 3}}),
      closure({Perm{1, 0, 2, 3, 4, 5, 6, 7}, Perm{0, 1, 3, 2, 4, 5, 6, 7}, Perm{0, 1, 2, 3, 5, 4, 6, 7}}),
      closure({Perm{1, 2, 3, 0, 4, 5, 6, 7}, Perm{0, 1, 2, 3, 5, 4, 6, 7}}),
      closure({Perm{1, 2, 3, 0, 4, 5, 6, 7}, Perm{3, 2, 1, 0, 4, 5, 6, 7}}),
      closure({Perm{1, 2, 3, 0, 5, 6, 7, 4}, Perm{4, 5, 6, 7, 0, 1, 2, 3}}),
      rho_image(q8_preset()),
  };
  std::mt19937 rng(12345);
  int regular = 0, irregular = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& base = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    ASSERT_EQ(base.size(), 8u);
    const auto N = conjugate_set(base, random_perm(rng, 8));
    const auto c = regularity(N, 8);
    const int holds = c.full_order + c.transitive + c.trivial_stabilizers;
    EXPECT_NE(holds, 2) << "exactly two regularity properties hold";
    (c.regular() ? regular : irregular)++;
  }
  EXPECT_GT(regular, 0);
  EXPECT_GT(irregular, 0);
}

TEST(Normalization, Examples) {
  const auto G = q8_preset();
  EXPECT_TRUE(is_normalized_by_lambda(rho_image(G), G));
  EXPECT_TRUE(is_normalized_by_lambda(lambda_image(G), G));
  // the 8-cycle through the points in index order is not of eta form
  const std::vector<int> pts{0, 1, 2, 3, 4, 5, 6, 7};
  const auto bad = closure({Perm::from_cycle(8, pts)});
  EXPECT_TRUE(is_regular(bad, 8));
  EXPECT_FALSE(is_normalized_by_lambda(bad, G));
}

TEST(ClassifyType, InvariantUnderConjugation) {
  const auto G = q8_preset();
  std::mt19937 rng(7);
  for (const auto& name : all_names()) {
    const auto N = build(name, G);
    for (int k = 0; k < 10; ++k) {
      EXPECT_EQ(classify_type(conjugate_set(N.elements, random_perm(rng, 8))), *N.type) << name.to_string();
    }
  }
  EXPECT_THROW(classify_type(closure({lambda_of(G, 1)})), InputError);
}

TEST(GroupIngestion, ValidatesTables) {
  nlohmann::json good = {{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"names", {"e", "x"}}, {"generators", {1}}};
  const auto G = group_from_json(good);
  EXPECT_EQ(G.order(), 2);
  EXPECT_EQ(G.name(1), "x");

  nlohmann::json not_latin = {{"order", 2}, {"table", {{0, 1}, {1, 1}}}};
  EXPECT_THROW(group_from_json(not_latin), InputError);

  // a Latin square with identity 0 that is not associative
  nlohmann::json loop = {{"order", 5},
                         {"table", {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}}};
  EXPECT_THROW(group_from_json(loop), InputError);

  nlohmann::json bad_gens = {{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"generators", {0}}};
  EXPECT_THROW(group_from_json(bad_gens), InputError);
  EXPECT_THROW(group_from_json(nlohmann::json::object()), InputError);
  EXPECT_THROW(load_group_file("/nonexistent/group.json"), InputError);
}

}  // namespace
}  // namespace hopfq8
