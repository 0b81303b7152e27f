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

// Brute-force enumeration of regular subgroups of Perm(G) normalized by
// lambda(G). Uses no knowledge of the named families.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hopfq8/group.hpp"
#include "hopfq8/named.hpp"

namespace hopfq8 {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000ULL;

enum class Strategy { OrbitDfs, PairClosure };

inline std::string to_string(Strategy s) { return s == Strategy::OrbitDfs ? "orbit-dfs" : "pair-closure"; }

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "orbit-dfs") return Strategy::OrbitDfs;
  if (s == "pair-closure") return Strategy::PairClosure;
  throw InputError("unknown strategy: " + s);
}

/// Reads HG_SEARCH_BUDGET, falling back to the default of 10^8 closure steps.
inline std::uint64_t search_budget_from_env() {
  const char* v = std::getenv("HG_SEARCH_BUDGET");
  if (v == nullptr || *v == '\0') return kDefaultSearchBudget;
  try {
    std::size_t used = 0;
    const unsigned long long b = std::stoull(v, &used);
    if (used != std::string(v).size() || b == 0) throw InputError("");
    return b;
  } catch (const std::exception&) {
    throw InputError(std::string("HG_SEARCH_BUDGET is not a positive integer: ") + v);
  }
}

/// Counts closure steps (products formed) against a fixed budget.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}

  void spend(std::uint64_t k = 1) {
    used_ += k;
    if (used_ > limit_) {
      throw SearchBudgetExceeded("search budget of " + std::to_string(limit_) + " closure steps exceeded");
    }
  }

  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Identity plus every fixed-point-free permutation of the points of G whose
/// order divides |G|.
inline std::vector<Perm> candidate_elements(const FiniteGroup& G, StepBudget& budget) {
  const int n = G.order();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Perm> out{Perm::identity(n)};
  do {
    budget.spend();
    bool fpf = true;
    for (int i = 0; i < n && fpf; ++i) fpf = image[i] != i;
    if (!fpf) continue;
    Perm p{std::span<const int>(image)};
    if (n % static_cast<int>(p.order()) == 0) out.push_back(p);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline std::vector<Perm> candidate_elements(const FiniteGroup& G) {
  StepBudget budget(kDefaultSearchBudget);
  return candidate_elements(G, budget);
}

/// Partition of `candidates` into lambda(G)-conjugation orbits, in order of
/// first appearance. Each orbit is sorted.
inline std::vector<std::vector<Perm>> conjugation_orbits(const std::vector<Perm>& candidates, const FiniteGroup& G) {
  std::vector<Perm> lams;
  for (int g : G.generators()) lams.push_back(lambda_of(G, g));
  std::vector<Perm> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> done(sorted.size(), false);
  auto index_of = [&](const Perm& p) -> std::optional<std::size_t> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
  };
  std::vector<std::vector<Perm>> orbits;
  for (const auto& c : candidates) {
    const auto ci = index_of(c);
    if (done[*ci]) continue;
    std::vector<Perm> orbit{c};
    done[*ci] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& l : lams) {
        Perm y = orbit[i].conjugated_by(l);
        const auto yi = index_of(y);
        if (!yi) throw VerificationError("candidate set is not stable under lambda(G)-conjugation");
        if (!done[*yi]) {
          done[*yi] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace detail {

/// Closure of `base` (already a subgroup, sorted) together with `extra`.
/// Returns nullopt when the result outgrows `cap` or acquires a non-identity
/// element with a fixed point.
inline std::optional<std::vector<Perm>> pruned_closure(const std::vector<Perm>& base, const std::vector<Perm>& extra,
                                                       std::size_t cap, StepBudget& budget) {
  std::vector<Perm> elems = base;
  std::set<Perm> seen(base.begin(), base.end());
  std::vector<Perm> gens = base.size() > 1 ? greedy_generators(base) : std::vector<Perm>{};
  for (const auto& e : extra) {
    if (!seen.contains(e)) gens.push_back(e);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      budget.spend();
      Perm y = g * elems[i];
      if (seen.insert(y).second) {
        if (elems.size() + 1 > cap) return std::nullopt;
        if (!y.is_identity() && y.fixed_points() != 0) return std::nullopt;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace detail

struct EnumerationOptions {
  Strategy strategy = Strategy::OrbitDfs;
  std::uint64_t budget = kDefaultSearchBudget;
  std::optional<std::uint32_t> shuffle_seed;  // permutes the candidate order
};

struct EnumerationResult {
  std::vector<RegularSubgroup> subgroups;  // sorted by canonical form
  bool validated = false;                  // |G| = 8 and G is quaternion
  std::uint64_t steps = 0;
  std::size_t candidate_count = 0;
  std::size_t orbit_count = 0;
};

inline EnumerationResult enumerate_regular_normalized(const FiniteGroup& G, const EnumerationOptions& opt = {}) {
  const std::size_t n = static_cast<std::size_t>(G.order());
  StepBudget budget(opt.budget);
  std::vector<Perm> candidates = candidate_elements(G, budget);
  if (opt.shuffle_seed) {
    std::mt19937 rng(*opt.shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  auto orbits = conjugation_orbits(candidates, G);
  const std::vector<Perm> trivial{Perm::identity(n)};

  // orbits whose own closure can sit inside a regular subgroup
  std::vector<std::vector<Perm>> usable;
  for (auto& o : orbits) {
    if (o.size() == 1 && o.front().is_identity()) continue;
    if (detail::pruned_closure(trivial, o, n, budget)) usable.push_back(std::move(o));
  }

  std::set<std::vector<Perm>> found;
  auto accept = [&](std::vector<Perm>&& S) {
    if (S.size() == n) found.insert(std::move(S));
  };

  if (opt.strategy == Strategy::OrbitDfs) {
    auto dfs = [&](auto&& self, const std::vector<Perm>& S, std::size_t start) -> void {
      for (std::size_t j = start; j < usable.size(); ++j) {
        const auto& orb = usable[j];
        if (std::all_of(orb.begin(), orb.end(), [&](const Perm& p) { return contains(S, p); })) continue;
        auto next = detail::pruned_closure(S, orb, n, budget);
        if (!next || n % next->size() != 0) continue;
        if (next->size() == n) {
          accept(std::move(*next));
        } else {
          self(self, *next, j + 1);
        }
      }
    };
    if (n == 1) found.insert(trivial);
    dfs(dfs, trivial, 0);
  } else {
    if (n == 1) found.insert(trivial);
    for (std::size_t i = 0; i < usable.size(); ++i) {
      const auto Si = detail::pruned_closure(trivial, usable[i], n, budget);
      accept(std::vector<Perm>(*Si));
      for (std::size_t j = i + 1; j < usable.size(); ++j) {
        if (auto S = detail::pruned_closure(*Si, usable[j], n, budget)) accept(std::move(*S));
      }
    }
  }

  EnumerationResult res;
  res.validated = is_quaternion_group(G);
  res.candidate_count = candidates.size();
  res.orbit_count = orbits.size();
  for (const auto& elems : found) {
    // independent re-verification; make_regular_subgroup checks regularity and normalization
    RegularSubgroup N = make_regular_subgroup(elems, G);
    if (res.validated) {
      if (auto name = match_name(N.elements, G)) N.name = name->to_string();
    }
    res.subgroups.push_back(std::move(N));
  }
  res.steps = budget.used();
  return res;
}

/// Count per type in the fixed order C2^3, C4xC2, C8, Q8, D4 (order 8 only).
inline std::map<GroupType, int> type_histogram(const std::vector<RegularSubgroup>& subgroups) {
  std::map<GroupType, int> h;
  for (auto t : {GroupType::C2xC2xC2, GroupType::C4xC2, GroupType::C8, GroupType::Q8, GroupType::D4}) h[t] = 0;
  for (const auto& N : subgroups) {
    if (N.type) ++h[*N.type];
  }
  return h;
}

/// "22 structures: 2 C2^3, 6 C4xC2, 6 C8, 2 Q8, 6 D4"
inline std::string summary_line(const std::vector<RegularSubgroup>& subgroups) {
  std::string out = std::to_string(subgroups.size()) + " structures";
  if (!subgroups.empty() && subgroups.front().size() == 8) {
    const auto h = type_histogram(subgroups);
    out += ":";
    bool first = true;
    for (const auto& [t, c] : h) {
      out += (first ? " " : ", ") + std::to_string(c) + " " + std::string(short_label(t));
      first = false;
    }
  }
  return out;
}

}  // namespace hopfq8
