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

// The G-action on a regular subgroup N by lambda(G)-conjugation, and the
// search for G-equivariant isomorphisms between two such subgroups.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfq8/group.hpp"
#include "hopfq8/named.hpp"

namespace hopfq8 {

/// g . x = lambda(g) x lambda(g)^-1
inline Perm act(const FiniteGroup& G, int g, const Perm& x) { return x.conjugated_by(lambda_of(G, g)); }

struct OrbitDecomposition {
  std::vector<std::vector<Perm>> orbits;  // each sorted; ordered by smallest element
  std::vector<std::vector<int>> stabilizers;  // of each orbit's smallest element, as sorted G indices

  std::size_t count() const { return orbits.size(); }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : orbits) s.push_back(o.size());
    return s;
  }

  std::size_t nontrivial_count() const {
    return static_cast<std::size_t>(std::count_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() > 1; }));
  }

  /// Stabilizer of an arbitrary element of N.
  const std::vector<int>& stabilizer_of(const Perm& x) const {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (contains(orbits[i], x)) return stabilizers[i];
    }
    throw InputError("element not in the decomposed subgroup");
  }
};

inline std::vector<int> stabilizer(const FiniteGroup& G, const Perm& x) {
  std::vector<int> st;
  for (int g = 0; g < G.order(); ++g) {
    if (act(G, g, x) == x) st.push_back(g);
  }
  return st;
}

inline OrbitDecomposition orbit_decomposition(const std::vector<Perm>& N, const FiniteGroup& G) {
  std::vector<Perm> elems = N;
  std::sort(elems.begin(), elems.end());
  if (!is_normalized_by_lambda(elems, G)) throw InputError("orbit_decomposition: N is not normalized by lambda(G)");
  OrbitDecomposition d;
  std::vector<bool> done(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::vector<Perm> orbit;
    for (int g = 0; g < G.order(); ++g) {
      Perm y = act(G, g, elems[i]);
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    for (const auto& y : orbit) {
      done[static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), y) - elems.begin())] = true;
    }
    auto st = stabilizer(G, orbit.front());
    if (orbit.size() * st.size() != static_cast<std::size_t>(G.order())) {
      throw VerificationError("orbit-stabilizer count failed");
    }
    d.orbits.push_back(std::move(orbit));
    d.stabilizers.push_back(std::move(st));
  }
  return d;
}

inline OrbitDecomposition orbit_decomposition(const RegularSubgroup& N, const FiniteGroup& G) {
  return orbit_decomposition(N.elements, G);
}

/// Necessary conditions for an equivariant isomorphism: type, sorted orbit
/// sizes, and the multiset of (orbit size, stabilizer, element order).
struct OrbitProfile {
  std::optional<GroupType> type;
  std::vector<std::tuple<std::size_t, std::vector<int>, std::size_t>> entries;

  bool operator==(const OrbitProfile&) const = default;
};

inline OrbitProfile orbit_profile(const RegularSubgroup& N, const FiniteGroup& G) {
  const auto d = orbit_decomposition(N, G);
  OrbitProfile p;
  p.type = N.type;
  for (std::size_t i = 0; i < d.count(); ++i) {
    p.entries.emplace_back(d.orbits[i].size(), d.stabilizers[i], d.orbits[i].front().order());
  }
  std::sort(p.entries.begin(), p.entries.end());
  return p;
}

/// A bijection N1 -> N2 stored as images of N1's sorted elements.
struct EquivariantIso {
  std::vector<Perm> domain;
  std::vector<Perm> image;

  const Perm& operator()(const Perm& x) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), x);
    if (it == domain.end() || *it != x) throw InputError("element outside the domain of the map");
    return image[static_cast<std::size_t>(it - domain.begin())];
  }
};

struct IsoCertificate {
  bool homomorphism = false;
  bool bijective = false;
  bool equivariant = false;

  bool ok() const { return homomorphism && bijective && equivariant; }
};

/// Checks the map on every pair of N1 and every (g, x) in G x N1.
inline IsoCertificate certify(const EquivariantIso& f, const RegularSubgroup& N1, const RegularSubgroup& N2,
                              const FiniteGroup& G) {
  IsoCertificate c;
  if (f.domain != N1.elements || f.image.size() != f.domain.size()) return c;
  std::vector<Perm> img = f.image;
  std::sort(img.begin(), img.end());
  c.bijective = img == N2.elements;
  c.homomorphism = true;
  for (const auto& x : N1.elements) {
    for (const auto& y : N1.elements) {
      if (f(x * y) != f(x) * f(y)) c.homomorphism = false;
    }
  }
  c.equivariant = true;
  for (int g = 0; g < G.order(); ++g) {
    for (const auto& x : N1.elements) {
      if (f(act(G, g, x)) != act(G, g, f(x))) c.equivariant = false;
    }
  }
  return c;
}

/// Extends gens[i] -> images[i] to a homomorphism on <gens> = N1; nullopt on
/// inconsistency. Bijectivity and equivariance are not checked here.
inline std::optional<EquivariantIso> extend_by_homomorphy(const RegularSubgroup& N1, const std::vector<Perm>& gens,
                                                          const std::vector<Perm>& images) {
  const std::size_t n = N1.elements.front().degree();
  std::map<Perm, Perm> f{{Perm::identity(n), Perm::identity(images.front().degree())}};
  std::vector<Perm> frontier{Perm::identity(n)};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Perm x = frontier[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Perm y = gens[k] * x;
      const Perm fy = images[k] * f.at(x);
      auto [it, inserted] = f.emplace(y, fy);
      if (inserted) {
        frontier.push_back(y);
      } else if (it->second != fy) {
        return std::nullopt;
      }
    }
  }
  if (f.size() != N1.size()) return std::nullopt;
  EquivariantIso iso;
  for (const auto& [x, y] : f) {
    iso.domain.push_back(x);
    iso.image.push_back(y);
  }
  return iso;
}

/// Exhaustive search over images of a greedy generating set of N1.
inline std::optional<EquivariantIso> find_equivariant_iso(const RegularSubgroup& N1, const RegularSubgroup& N2,
                                                          const FiniteGroup& G) {
  if (N1.size() != N2.size()) return std::nullopt;
  const auto gens = greedy_generators(N1.elements);
  std::vector<std::size_t> idx(gens.size(), 0);
  const std::size_t m = N2.size();
  while (true) {
    std::vector<Perm> images;
    bool orders_match = true;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      images.push_back(N2.elements[idx[k]]);
      orders_match = orders_match && images.back().order() == gens[k].order();
    }
    if (orders_match) {
      if (auto f = extend_by_homomorphy(N1, gens, images)) {
        if (certify(*f, N1, N2, G).ok()) return f;
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == m) idx[k++] = 0;
    if (k == idx.size()) return std::nullopt;
  }
}

struct HopfClasses {
  std::vector<std::vector<std::string>> classes;  // names sorted within, classes sorted by first name
  // witness maps for every ordered pair (i < j) in the same class, keyed by names
  std::vector<std::tuple<std::string, std::string, EquivariantIso>> witnesses;
  std::vector<std::vector<bool>> relation;  // full 22 x 22 existence matrix
  bool is_equivalence = false;
};

/// Partition by existence of an equivariant isomorphism; the relation is
/// computed on all ordered pairs and checked to be an equivalence.
inline HopfClasses hopf_iso_classes(const std::vector<RegularSubgroup>& all, const FiniteGroup& G) {
  const std::size_t k = all.size();
  HopfClasses out;
  out.relation.assign(k, std::vector<bool>(k, false));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(all[i].name.value_or("N" + std::to_string(i)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto f = find_equivariant_iso(all[i], all[j], G);
      out.relation[i][j] = f.has_value();
      if (f && i < j) out.witnesses.emplace_back(names[i], names[j], std::move(*f));
    }
  }
  bool eq = true;
  for (std::size_t i = 0; i < k; ++i) {
    eq = eq && out.relation[i][i];
    for (std::size_t j = 0; j < k; ++j) {
      eq = eq && out.relation[i][j] == out.relation[j][i];
      for (std::size_t l = 0; l < k; ++l) {
        if (out.relation[i][j] && out.relation[j][l]) eq = eq && out.relation[i][l];
      }
    }
  }
  out.is_equivalence = eq;
  if (!eq) throw VerificationError("equivariant isomorphism is not an equivalence relation");
  std::vector<bool> placed(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (placed[i]) continue;
    std::vector<std::string> cls;
    for (std::size_t j = i; j < k; ++j) {
      if (out.relation[i][j]) {
        placed[j] = true;
        cls.push_back(names[j]);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

/// Exhaustive count of G-equivariant bijections N1 -> N2 (as maps of sets)
/// and how many of them preserve element orders everywhere.
struct EquivariantBijectionCount {
  std::size_t equivariant = 0;
  std::size_t order_preserving = 0;
};

inline EquivariantBijectionCount count_equivariant_bijections(const RegularSubgroup& N1, const RegularSubgroup& N2,
                                                              const FiniteGroup& G) {
  EquivariantBijectionCount c;
  if (N1.size() != N2.size()) return c;
  std::vector<std::size_t> perm(N1.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Perm> lams;
  for (int g = 0; g < G.order(); ++g) lams.push_back(lambda_of(G, g));
  do {
    EquivariantIso f{N1.elements, {}};
    for (std::size_t i : perm) f.image.push_back(N2.elements[i]);
    bool equivariant = true;
    for (std::size_t g = 0; g < lams.size() && equivariant; ++g) {
      for (std::size_t i = 0; i < N1.size() && equivariant; ++i) {
        equivariant = f(N1.elements[i].conjugated_by(lams[g])) == f.image[i].conjugated_by(lams[g]);
      }
    }
    if (!equivariant) continue;
    ++c.equivariant;
    bool orders = true;
    for (std::size_t i = 0; i < N1.size(); ++i) orders = orders && N1.elements[i].order() == f.image[i].order();
    if (orders) ++c.order_preserving;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

/// Images of the stated generators of one family's explicit isomorphism.
struct ExplicitMap {
  std::string description;
  StructureName source;
  StructureName target;
  std::vector<Perm> gens;
  std::vector<Perm> images;
};

/// The three explicit maps: E_{s,t} -> E_{t,s}, A_{s,t} -> A_{s,t'}, C_{s,t} -> C_{s',t}.
inline std::vector<ExplicitMap> explicit_maps(const FiniteGroup& G) {
  auto L = [&](int g) { return lambda_of(G, g); };
  auto R = [&](int g) { return rho_of(G, g); };
  std::vector<ExplicitMap> maps;
  {
    const int s = element_of(G, Symbol::Sigma), t = element_of(G, Symbol::Tau);
    const int st = G.mul(s, t);
    maps.push_back({"E[s,t] -> E[t,s]",
                    {Family::E, Symbol::Sigma, Symbol::Tau},
                    {Family::E, Symbol::Tau, Symbol::Sigma},
                    {L(s) * R(t), L(G.mul(s, s)), L(t) * R(st)},
                    {L(s) * R(G.inverse(st)), L(G.mul(s, s)), L(t) * R(s)}});
  }
  for (Symbol s : kSymbols) {
    for (Symbol t : kSymbols) {
      for (Symbol t2 : kSymbols) {
        if (s == t || s == t2 || t == t2) continue;
        maps.push_back({"A[s,t] -> A[s,t']",
                        {Family::A, s, t},
                        {Family::A, s, t2},
                        {L(element_of(G, s)), R(element_of(G, t))},
                        {L(element_of(G, s)), R(element_of(G, t2))}});
      }
    }
  }
  for (Symbol t : kSymbols) {
    for (Symbol s : kSymbols) {
      for (Symbol s2 : kSymbols) {
        if (s == t || s2 == t || s == s2) continue;
        maps.push_back({"C[s,t] -> C[s',t]", {Family::C, s, t}, {Family::C, s2, t}, {eta(G, s, t)}, {eta(G, s2, t)}});
      }
    }
  }
  return maps;
}

/// Builds and certifies an explicit map; nullopt if it does not extend to a certified isomorphism.
inline std::optional<EquivariantIso> realize(const ExplicitMap& m, const FiniteGroup& G) {
  const auto N1 = build(m.source, G);
  const auto N2 = build(m.target, G);
  for (const auto& x : m.gens) {
    if (!N1.contains(x)) return std::nullopt;
  }
  if (closure(m.gens) != N1.elements) return std::nullopt;
  auto f = extend_by_homomorphy(N1, m.gens, m.images);
  if (!f || !certify(*f, N1, N2, G).ok()) return std::nullopt;
  return f;
}

}  // namespace hopfq8
