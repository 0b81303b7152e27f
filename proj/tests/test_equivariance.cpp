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

namespace hopfq8 {
namespace {

const FiniteGroup& Q8() {
  static const FiniteGroup g = q8_preset();
  return g;
}

RegularSubgroup B(const std::string& name) { return build(StructureName::parse(name), Q8()); }

std::vector<Perm> sorted(std::vector<Perm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const HopfClasses& classes() {
  static const HopfClasses c = hopf_iso_classes(all_named(Q8()), Q8());
  return c;
}

TEST(Orbits, ATypeTwoOrbitsStabilizedByS) {
  const auto& G = Q8();
  const auto d = orbit_decomposition(B("A[s=sigma,t=tau]"), G);
  EXPECT_EQ(d.nontrivial_count(), 2u);
  const Perm ls = lambda_of(G, 1), lsi = lambda_of(G, 3), rt = rho_of(G, 4);
  std::vector<std::vector<Perm>> nontrivial;
  for (std::size_t i = 0; i < d.count(); ++i) {
    if (d.orbits[i].size() == 1) continue;
    nontrivial.push_back(d.orbits[i]);
    EXPECT_EQ(d.stabilizers[i], G.cyclic_subgroup(1));
  }
  EXPECT_NE(std::find(nontrivial.begin(), nontrivial.end(), sorted({ls, lsi})), nontrivial.end());
  EXPECT_NE(std::find(nontrivial.begin(), nontrivial.end(), sorted({ls * rt, lsi * rt})), nontrivial.end());
}

TEST(Orbits, CTypeThreeOrbitsStabilizedByT) {
  const auto& G = Q8();
  const auto d = orbit_decomposition(B("C[s=sigma,t=tau]"), G);
  const Perm e = eta(G, Symbol::Sigma, Symbol::Tau);
  std::vector<std::vector<Perm>> expect{sorted({e, e.pow(3)}), sorted({e.pow(2), e.pow(6)}),
                                        sorted({e.pow(5), e.pow(7)})};
  EXPECT_EQ(d.nontrivial_count(), 3u);
  for (const auto& o : expect) {
    EXPECT_NE(std::find(d.orbits.begin(), d.orbits.end(), o), d.orbits.end());
    EXPECT_EQ(d.stabilizer_of(o.front()), G.cyclic_subgroup(4));
  }
}

TEST(Orbits, ClassicalStructureHasOnlySingletons) {
  const auto d = orbit_decomposition(B("Q8_rho"), Q8());
  EXPECT_EQ(d.count(), 8u);
  for (const auto& st : d.stabilizers) EXPECT_EQ(st.size(), 8u);
}

TEST(Orbits, ETypeOrbitsAndStabilizers) {
  const auto& G = Q8();
  const int s = 1, t = 4, st = 5;
  auto L = [&](int g) { return lambda_of(G, g); };
  auto R = [&](int g) { return rho_of(G, g); };
  const auto d = orbit_decomposition(B("E[s=sigma,t=tau]"), G);
  EXPECT_EQ(d.nontrivial_count(), 3u);
  const std::vector<std::pair<std::vector<Perm>, int>> expect{
      {sorted({L(s) * R(t), L(G.inverse(s)) * R(t)}), s},
      {sorted({L(t) * R(st), L(G.inverse(t)) * R(st)}), t},
      {sorted({L(st) * R(s), L(G.inverse(st)) * R(s)}), st}};
  for (const auto& [orb, gen] : expect) {
    EXPECT_NE(std::find(d.orbits.begin(), d.orbits.end(), orb), d.orbits.end());
    EXPECT_EQ(d.stabilizer_of(orb.front()), G.cyclic_subgroup(gen));
  }
}

TEST(Orbits, DTypeOrbitCounts) {
  for (Symbol s : kSymbols) {
    const auto dl = orbit_decomposition(build({Family::DLambda, s, std::nullopt}, Q8()), Q8());
    const auto dr = orbit_decomposition(build({Family::DRho, s, std::nullopt}, Q8()), Q8());
    EXPECT_EQ(dl.nontrivial_count(), 3u);
    EXPECT_EQ(dl.count(), 5u);
    EXPECT_EQ(dr.nontrivial_count(), 2u);
    EXPECT_EQ(dr.count(), 6u);
    for (std::size_t i = 0; i < dr.count(); ++i) {
      if (dr.orbits[i].size() > 1) {
        EXPECT_EQ(dr.stabilizers[i], Q8().cyclic_subgroup(element_of(Q8(), s)));
      }
    }
  }
}

TEST(Orbits, InvariantsHoldForAll) {
  for (const auto& N : all_named(Q8())) {
    const auto d = orbit_decomposition(N, Q8());
    std::size_t total = 0;
    for (std::size_t i = 0; i < d.count(); ++i) {
      total += d.orbits[i].size();
      EXPECT_EQ(d.orbits[i].size() * d.stabilizers[i].size(), 8u);
    }
    EXPECT_EQ(total, 8u);
    EXPECT_EQ(d.orbits.front(), std::vector<Perm>{Perm::identity(8)});
  }
  EXPECT_THROW(orbit_decomposition(closure({Perm::from_cycle(8, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7})}), Q8()),
               InputError);
}

TEST(Iso, ExamplesFromTheCriterion) {
  const auto rho = B("Q8_rho"), lam = B("Q8_lambda");
  EXPECT_FALSE(find_equivariant_iso(lam, rho, Q8()).has_value());
  const auto f = find_equivariant_iso(rho, rho, Q8());
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(certify(*f, rho, rho, Q8()).ok());
  const EquivariantIso id{rho.elements, rho.elements};
  EXPECT_TRUE(certify(id, rho, rho, Q8()).ok());
  EXPECT_TRUE(find_equivariant_iso(B("E[s=sigma,t=tau]"), B("E[s=tau,t=sigma]"), Q8()).has_value());
}

TEST(Iso, ExplicitMapsPassCertificate) {
  const auto maps = explicit_maps(Q8());
  EXPECT_EQ(maps.size(), 1u + 6 + 6);
  for (const auto& m : maps) {
    EXPECT_TRUE(realize(m, Q8()).has_value()) << m.description << " " << m.source.to_string();
  }
}

TEST(Iso, CertificateRejectsBrokenMaps) {
  const auto N = B("A[s=sigma,t=tau]");
  EquivariantIso swap{N.elements, N.elements};
  std::swap(swap.image[1], swap.image[2]);
  EXPECT_FALSE(certify(swap, N, N, Q8()).ok());
  EquivariantIso collapse{N.elements, std::vector<Perm>(8, Perm::identity(8))};
  const auto c = certify(collapse, N, N, Q8());
  EXPECT_TRUE(c.homomorphism);
  EXPECT_FALSE(c.bijective);
}

TEST(HopfClasses, FifteenClasses) {
  const auto& c = classes();
  EXPECT_TRUE(c.is_equivalence);
  ASSERT_EQ(c.classes.size(), 15u);
  std::map<std::size_t, int> sizes;
  for (const auto& cls : c.classes) ++sizes[cls.size()];
  // 1 E-pair, 3 A-pairs, 3 C-pairs, 2 + 6 singletons
  EXPECT_EQ(sizes[2], 7);
  EXPECT_EQ(sizes[1], 8);
  auto same = [&](const std::string& x, const std::string& y) {
    for (const auto& cls : c.classes) {
      const bool hx = std::find(cls.begin(), cls.end(), x) != cls.end();
      const bool hy = std::find(cls.begin(), cls.end(), y) != cls.end();
      if (hx || hy) return hx && hy;
    }
    return false;
  };
  EXPECT_TRUE(same("E[s=sigma,t=tau]", "E[s=tau,t=sigma]"));
  EXPECT_FALSE(same("Q8_rho", "Q8_lambda"));
  const auto names = all_names();
  for (const auto& x : names) {
    for (const auto& y : names) {
      if (x.family != y.family) {
        EXPECT_FALSE(same(x.to_string(), y.to_string()));
      } else if (x.family == Family::A) {
        EXPECT_EQ(same(x.to_string(), y.to_string()), x.s == y.s);
      } else if (x.family == Family::C) {
        EXPECT_EQ(same(x.to_string(), y.to_string()), x.t == y.t);
      } else if (x.is_d_family()) {
        EXPECT_EQ(same(x.to_string(), y.to_string()), x == y);
      }
    }
  }
  EXPECT_EQ(c.witnesses.size(), 7u);
}

TEST(HopfClasses, ProfilesAreNecessaryConditions) {
  const auto all = all_named(Q8());
  const auto& c = classes();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (c.relation[i][j]) {
        EXPECT_EQ(orbit_profile(all[i], Q8()), orbit_profile(all[j], Q8()));
      }
    }
  }
}

TEST(HopfClasses, WitnessesAreCertified) {
  const auto& c = classes();
  for (const auto& [a, b, f] : c.witnesses) {
    EXPECT_TRUE(certify(f, B(a), B(b), Q8()).ok()) << a << " -> " << b;
  }
}

TEST(Obstruction, DLambdaBijectionsBreakOrders) {
  for (Symbol s : kSymbols) {
    for (Symbol s2 : kSymbols) {
      if (s == s2) continue;
      const auto N1 = build({Family::DLambda, s, std::nullopt}, Q8());
      const auto N2 = build({Family::DLambda, s2, std::nullopt}, Q8());
      const auto count = count_equivariant_bijections(N1, N2, Q8());
      EXPECT_GT(count.equivariant, 0u);
      EXPECT_EQ(count.order_preserving, 0u);
    }
  }
}

}  // namespace
}  // namespace hopfq8
