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

#include "hopfq8/equivariance.hpp"
#include "hopfq8/wedderburn.hpp"

namespace hopfq8 {
namespace {

const FiniteGroup& Q8() {
  static const FiniteGroup g = q8_preset();
  return g;
}

const FAlgebraClasses& classes_at(int a, int b) {
  static std::map<std::pair<int, int>, FAlgebraClasses> cache;
  auto it = cache.find({a, b});
  if (it == cache.end()) it = cache.emplace(std::pair{a, b}, f_algebra_classes(Q8(), BiquadraticModel(a, b))).first;
  return it->second;
}

std::string described(int a, int b, const std::string& name) {
  for (const auto& r : classes_at(a, b).reports) {
    if (r.name.to_string() == name) return r.computed.descriptor.to_string();
  }
  return "missing";
}

std::vector<std::string> class_of(int a, int b, const std::string& name) {
  for (const auto& c : classes_at(a, b).classes) {
    for (const auto& m : c.members) {
      if (m.to_string() == name) {
        std::vector<std::string> out;
        for (const auto& x : c.members) out.push_back(x.to_string());
        return out;
      }
    }
  }
  return {};
}

TEST(Wedderburn, InstancesAt11And2) {
  EXPECT_EQ(described(11, 2, "E[s=sigma,t=tau]"), "Q^4 x Q(sqrt(2),sqrt(11))");
  EXPECT_EQ(described(11, 2, "Q8_rho"), "Q^4 x H{2,inf}");
  EXPECT_EQ(described(11, 2, "Q8_lambda"), "Q^4 x H{2,inf}");
  EXPECT_EQ(described(11, 2, "C[s=sigma,t=tau]"), "Q^2 x Q(sqrt(-2))^3");
  EXPECT_EQ(described(11, 2, "A[s=sigma,t=tau]"), "Q^4 x Q(sqrt(-11),sqrt(-1))");
  EXPECT_EQ(described(11, 2, "D_rho[s=tau]"), "Q^4 x M2(Q)");
  EXPECT_EQ(described(11, 2, "D_rho[s=sigma]"), "Q^4 x H{2,11}");
}

TEST(Wedderburn, ClassesAt11And2) {
  EXPECT_EQ(classes_at(11, 2).classes.size(), 10u);
  EXPECT_EQ(class_of(11, 2, "D_rho[s=tau]"), (std::vector<std::string>{"D_lambda[s=tau]", "D_rho[s=tau]"}));
  EXPECT_EQ(class_of(11, 2, "D_rho[s=sigma]"),
            (std::vector<std::string>{"D_lambda[s=sigma]", "D_lambda[s=sigmatau]", "D_rho[s=sigma]",
                                      "D_rho[s=sigmatau]"}));
}

TEST(Wedderburn, ThreeDClassesAt11And6) {
  std::set<std::string> d_classes;
  for (const auto& r : classes_at(11, 6).reports) {
    if (r.name.is_d_family()) d_classes.insert(r.computed.descriptor.to_string());
  }
  EXPECT_EQ(d_classes, (std::set<std::string>{"Q^4 x H{2,11}", "Q^4 x H{2,3}", "Q^4 x H{3,11}"}));
}

TEST(Wedderburn, TemplatesMatchAndGateFlags) {
  for (auto [a, b] : {std::pair{11, 2}, std::pair{11, 6}, std::pair{3, 5}}) {
    const bool embeddable = witt_embeddable(SquareClass(a), SquareClass(b));
    for (const auto& r : classes_at(a, b).reports) {
      EXPECT_TRUE(r.matches_template()) << r.name.to_string();
      const auto& f = r.computed.descriptor.flags;
      EXPECT_EQ(std::count(f.begin(), f.end(), "no_quaternionic_extension"), embeddable ? 0 : 1);
      EXPECT_EQ(r.computed.descriptor.dimension(), 8);
    }
  }
  // without the gate, lambda(G) and rho(G) give different algebras
  EXPECT_NE(described(3, 5, "Q8_lambda"), described(3, 5, "Q8_rho"));
}

TEST(Wedderburn, HopfIsomorphicImpliesAlgebraIsomorphic) {
  const auto hopf = hopf_iso_classes(all_named(Q8()), Q8());
  for (auto [a, b] : {std::pair{11, 2}, std::pair{11, 6}, std::pair{3, 5}}) {
    for (const auto& cls : hopf.classes) {
      for (const auto& n : cls) EXPECT_EQ(described(a, b, n), described(a, b, cls.front())) << n;
    }
  }
}

TEST(Wedderburn, JsonIsDeterministic) {
  const auto name = StructureName::parse("C[s=tau,t=sigma]");
  const auto j1 = to_json(wedderburn(name, Q8(), BiquadraticModel(11, 2))).dump();
  const auto j2 = to_json(wedderburn(name, Q8(), BiquadraticModel(11, 2))).dump();
  EXPECT_EQ(j1, j2);
  const auto j = nlohmann::json::parse(j1);
  ASSERT_TRUE(j.contains("blocks"));
  ASSERT_TRUE(j.contains("flags"));
  for (const auto& blk : j["blocks"]) {
    EXPECT_TRUE(blk.contains("kind"));
    EXPECT_TRUE(blk.contains("data"));
    EXPECT_TRUE(blk.contains("multiplicity"));
  }
}

}  // namespace
}  // namespace hopfq8
