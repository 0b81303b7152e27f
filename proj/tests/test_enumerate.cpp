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

#include "hopfq8/enumerate.hpp"

namespace hopfq8 {
namespace {

const FiniteGroup& Q8() {
  static const FiniteGroup g = q8_preset();
  return g;
}

const EnumerationResult& dfs_result() {
  static const EnumerationResult r = enumerate_regular_normalized(Q8());
  return r;
}

FiniteGroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(t, {}, {});
}

std::set<std::vector<Perm>> canonical_set(const std::vector<RegularSubgroup>& v) {
  std::set<std::vector<Perm>> s;
  for (const auto& N : v) s.insert(N.elements);
  return s;
}

TEST(Candidates, CycleTypeCounts) {
  const auto cands = candidate_elements(Q8());
  std::map<std::vector<int>, int> by_type;
  for (const auto& p : cands) ++by_type[p.cycle_type()];
  // 8!/(2^4 4!), 8!/(4^2 2!), C(8,4) 3! 3, 7!
  EXPECT_EQ((by_type[{2, 2, 2, 2}]), 105);
  EXPECT_EQ((by_type[{4, 4}]), 1260);
  EXPECT_EQ((by_type[{4, 2, 2}]), 1260);
  EXPECT_EQ((by_type[{8}]), 5040);
  EXPECT_EQ((by_type[{1, 1, 1, 1, 1, 1, 1, 1}]), 1);
  EXPECT_EQ(cands.size(), 1u + 105 + 1260 + 1260 + 5040);
  std::vector<Perm> sorted = cands;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& N : all_named(Q8())) {
    for (const auto& p : N.elements) EXPECT_TRUE(contains(sorted, p));
  }
}

TEST(ConjugationOrbits, Examples) {
  const auto orbits = conjugation_orbits(candidate_elements(Q8()), Q8());
  auto orbit_of = [&](const Perm& p) {
    for (const auto& o : orbits) {
      if (contains(o, p)) return o;
    }
    return std::vector<Perm>{};
  };
  std::size_t total = 0;
  for (const auto& o : orbits) {
    EXPECT_EQ(8 % o.size(), 0u);
    total += o.size();
  }
  EXPECT_EQ(total, 1u + 105 + 1260 + 1260 + 5040);
  EXPECT_EQ(orbit_of(rho_of(Q8(), 2)).size(), 1u);
  const Perm e = eta(Q8(), Symbol::Sigma, Symbol::Tau);
  std::vector<Perm> expect{e, e.pow(3)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(orbit_of(e), expect);
  std::vector<Perm> lam{lambda_of(Q8(), 1), lambda_of(Q8(), 3)};
  std::sort(lam.begin(), lam.end());
  EXPECT_EQ(orbit_of(lambda_of(Q8(), 1)), lam);
}

TEST(Enumerate, Q8HasTwentyTwoStructures) {
  const auto& r = dfs_result();
  EXPECT_TRUE(r.validated);
  ASSERT_EQ(r.subgroups.size(), 22u);
  EXPECT_EQ(summary_line(r.subgroups), "22 structures: 2 C2^3, 6 C4xC2, 6 C8, 2 Q8, 6 D4");
  EXPECT_EQ(canonical_set(r.subgroups), canonical_set(all_named(Q8())));
  for (const auto& N : r.subgroups) {
    EXPECT_TRUE(N.name.has_value());
    EXPECT_TRUE(is_regular(N.elements, 8));
    EXPECT_TRUE(is_normalized_by_lambda(N.elements, Q8()));
    EXPECT_TRUE(N.contains(rho_of(Q8(), 2)));
  }
  EXPECT_TRUE(std::is_sorted(r.subgroups.begin(), r.subgroups.end(),
                             [](const auto& a, const auto& b) { return a.elements < b.elements; }));
}

TEST(Enumerate, PairClosureAgrees) {
  EnumerationOptions opt;
  opt.strategy = Strategy::PairClosure;
  const auto r = enumerate_regular_normalized(Q8(), opt);
  EXPECT_EQ(canonical_set(r.subgroups), canonical_set(dfs_result().subgroups));
}

TEST(Enumerate, IndependentOfCandidateOrder) {
  for (std::uint32_t seed : {1u, 99u}) {
    EnumerationOptions opt;
    opt.shuffle_seed = seed;
    const auto r = enumerate_regular_normalized(Q8(), opt);
    EXPECT_EQ(canonical_set(r.subgroups), canonical_set(dfs_result().subgroups)) << seed;
  }
}

TEST(Enumerate, SmallCyclicGroups) {
  for (int n : {1, 2, 3, 5}) {
    for (Strategy s : {Strategy::OrbitDfs, Strategy::PairClosure}) {
      EnumerationOptions opt;
      opt.strategy = s;
      const auto r = enumerate_regular_normalized(cyclic(n), opt);
      EXPECT_FALSE(r.validated);
      EXPECT_EQ(r.subgroups.size(), 1u) << n;
    }
  }
}

TEST(Enumerate, StrategiesAgreeOnSmallGroups) {
  // C4 and the Klein group
  FiniteGroup v4({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {}, {});
  for (const auto& G : {cyclic(4), v4, cyclic(6)}) {
    EnumerationOptions a, b;
    b.strategy = Strategy::PairClosure;
    const auto ra = enumerate_regular_normalized(G, a);
    const auto rb = enumerate_regular_normalized(G, b);
    EXPECT_EQ(canonical_set(ra.subgroups), canonical_set(rb.subgroups));
    EXPECT_FALSE(ra.subgroups.empty());
  }
}

TEST(Enumerate, BudgetExhaustionIsAnError) {
  EnumerationOptions opt;
  opt.budget = 1000;
  EXPECT_THROW(enumerate_regular_normalized(Q8(), opt), SearchBudgetExceeded);
}

TEST(Enumerate, BudgetFromEnvironment) {
  ::setenv("HG_SEARCH_BUDGET", "12345", 1);
  EXPECT_EQ(search_budget_from_env(), 12345u);
  ::setenv("HG_SEARCH_BUDGET", "lots", 1);
  EXPECT_THROW(search_budget_from_env(), InputError);
  ::unsetenv("HG_SEARCH_BUDGET");
  EXPECT_EQ(search_budget_from_env(), kDefaultSearchBudget);
}

}  // namespace
}  // namespace hopfq8
