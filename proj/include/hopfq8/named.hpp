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

// The 22 regular subgroups of Perm(Q8) normalized by lambda(Q8), built from
// explicit generators in terms of lambda, rho and the 8-cycles eta_{s,t}.

#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "hopfq8/group.hpp"

namespace hopfq8 {

enum class Family { E, A, C, Q8Rho, Q8Lambda, DLambda, DRho };

/// The three order-4 generator symbols sigma, tau, sigma*tau.
enum class Symbol { Sigma, Tau, SigmaTau };

inline constexpr Symbol kSymbols[] = {Symbol::Sigma, Symbol::Tau, Symbol::SigmaTau};

inline std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::Sigma: return "sigma";
    case Symbol::Tau: return "tau";
    case Symbol::SigmaTau: return "sigmatau";
  }
  return "?";
}

inline Symbol symbol_from_string(const std::string& s) {
  for (Symbol x : kSymbols) {
    if (to_string(x) == s) return x;
  }
  throw InputError("unknown generator symbol: " + s);
}

/// The symbol u with {s, t, u} = {sigma, tau, sigmatau}; names the coset of s*t.
inline Symbol third_symbol(Symbol s, Symbol t) {
  if (s == t) throw InputError("third_symbol: s and t must differ");
  for (Symbol x : kSymbols) {
    if (x != s && x != t) return x;
  }
  return s;
}

inline std::string family_token(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::A: return "A";
    case Family::C: return "C";
    case Family::Q8Rho: return "Q8_rho";
    case Family::Q8Lambda: return "Q8_lambda";
    case Family::DLambda: return "D_lambda";
    case Family::DRho: return "D_rho";
  }
  return "?";
}

/// A name from the E/A/C/Q8/D naming scheme. For the D families `t` is an
/// auxiliary choice that does not change the subgroup; it is not serialized.
struct StructureName {
  Family family = Family::Q8Rho;
  std::optional<Symbol> s;
  std::optional<Symbol> t;

  void validate() const {
    switch (family) {
      case Family::E:
        if (!s || !t || *s == *t || *s == Symbol::SigmaTau || *t == Symbol::SigmaTau) {
          throw InputError("E[s,t] needs distinct s,t in {sigma,tau}");
        }
        break;
      case Family::A:
      case Family::C:
        if (!s || !t || *s == *t) throw InputError(family_token(family) + "[s,t] needs distinct s,t");
        break;
      case Family::Q8Rho:
      case Family::Q8Lambda:
        if (s || t) throw InputError(family_token(family) + " takes no parameters");
        break;
      case Family::DLambda:
      case Family::DRho:
        if (!s) throw InputError(family_token(family) + "[s] needs s");
        if (t && *t == *s) throw InputError(family_token(family) + ": auxiliary t must differ from s");
        break;
    }
  }

  bool is_d_family() const { return family == Family::DLambda || family == Family::DRho; }

  /// Auxiliary t for the D families: the given one, else the first symbol != s.
  Symbol aux_t() const {
    if (t) return *t;
    for (Symbol x : kSymbols) {
      if (x != *s) return x;
    }
    return *s;
  }

  /// Drops the auxiliary t of a D-family name.
  StructureName canonical() const {
    StructureName c = *this;
    if (is_d_family()) c.t.reset();
    return c;
  }

  std::string to_string() const {
    const StructureName c = canonical();
    std::string out = family_token(family);
    if (c.s && c.t) out += "[s=" + hopfq8::to_string(*c.s) + ",t=" + hopfq8::to_string(*c.t) + "]";
    else if (c.s) out += "[s=" + hopfq8::to_string(*c.s) + "]";
    return out;
  }

  static StructureName parse(const std::string& text) {
    static const std::regex re(R"(^(E|A|C|Q8_rho|Q8_lambda|D_lambda|D_rho)(?:\[s=(\w+)(?:,t=(\w+))?\])?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw InputError("malformed structure name: " + text);
    StructureName n;
    const std::string fam = m[1];
    for (Family f : {Family::E, Family::A, Family::C, Family::Q8Rho, Family::Q8Lambda, Family::DLambda,
                     Family::DRho}) {
      if (family_token(f) == fam) n.family = f;
    }
    if (m[2].matched) n.s = symbol_from_string(m[2]);
    if (m[3].matched) n.t = symbol_from_string(m[3]);
    n.validate();
    return n;
  }

  bool operator==(const StructureName& o) const {
    const auto a = canonical(), b = o.canonical();
    return a.family == b.family && a.s == b.s && a.t == b.t;
  }
};

/// Element index of a generator symbol in the Q8 preset (sigma, tau are the
/// designated generators; sigmatau is their product).
inline int element_of(const FiniteGroup& G, Symbol s) {
  if (G.generators().size() < 2) throw InputError("group lacks designated sigma/tau generators");
  const int sigma = G.generators()[0], tau = G.generators()[1];
  switch (s) {
    case Symbol::Sigma: return sigma;
    case Symbol::Tau: return tau;
    case Symbol::SigmaTau: return G.mul(sigma, tau);
  }
  return G.identity();
}

inline void require_q8(const FiniteGroup& G) {
  if (!is_quaternion_group(G)) throw InputError("named structures are defined for the quaternion group only");
  const int s = G.generators().at(0), t = G.generators().at(1);
  const bool relations = G.element_order(s) == 4 && G.element_order(t) == 4 &&
                         G.power(s, 2) == G.power(t, 2) && G.mul(s, t) == G.mul(t, G.inverse(s));
  if (!relations) throw InputError("designated generators do not satisfy the quaternion relations");
}

/// eta_{s,t} = (1 s t (st)^-1 s^2 s^-1 t^-1 st), an 8-cycle on the points of G.
inline Perm eta(const FiniteGroup& G, Symbol s_sym, Symbol t_sym) {
  const int s = element_of(G, s_sym), t = element_of(G, t_sym);
  const int st = G.mul(s, t);
  const std::vector<int> cycle{G.identity(), s, t, G.inverse(st), G.mul(s, s), G.inverse(s), G.inverse(t), st};
  return Perm::from_cycle(static_cast<std::size_t>(G.order()), cycle);
}

/// Generators exactly as stated for each family.
inline std::vector<Perm> lemma_generators(const StructureName& name, const FiniteGroup& G) {
  name.validate();
  auto lam = [&](int g) { return lambda_of(G, g); };
  auto rho = [&](int g) { return rho_of(G, g); };
  switch (name.family) {
    case Family::E: {
      const int s = element_of(G, *name.s), t = element_of(G, *name.t);
      return {lam(s) * rho(t), lam(G.mul(s, s)), lam(t) * rho(G.mul(s, t))};
    }
    case Family::A: return {lam(element_of(G, *name.s)), rho(element_of(G, *name.t))};
    case Family::C: return {eta(G, *name.s, *name.t)};
    case Family::Q8Rho: return {rho(element_of(G, Symbol::Sigma)), rho(element_of(G, Symbol::Tau))};
    case Family::Q8Lambda: return {lam(element_of(G, Symbol::Sigma)), lam(element_of(G, Symbol::Tau))};
    case Family::DLambda: {
      const int s = element_of(G, *name.s), t = element_of(G, name.aux_t());
      return {lam(s), lam(t) * rho(s)};
    }
    case Family::DRho: {
      const int s = element_of(G, *name.s), t = element_of(G, name.aux_t());
      return {rho(s), lam(s) * rho(t)};
    }
  }
  return {};
}

inline GroupType claimed_type(Family f) {
  switch (f) {
    case Family::E: return GroupType::C2xC2xC2;
    case Family::A: return GroupType::C4xC2;
    case Family::C: return GroupType::C8;
    case Family::Q8Rho:
    case Family::Q8Lambda: return GroupType::Q8;
    case Family::DLambda:
    case Family::DRho: return GroupType::D4;
  }
  return GroupType::Q8;
}

/// Closure of the family's generators, certified regular, normalized and of the claimed type.
inline RegularSubgroup build(const StructureName& name, const FiniteGroup& G) {
  require_q8(G);
  auto gens = lemma_generators(name, G);
  auto elems = closure(gens);
  RegularSubgroup N = make_regular_subgroup(std::move(elems), G, gens, name.to_string());
  if (N.type != claimed_type(name.family)) {
    throw VerificationError(name.to_string() + " has type " + (N.type ? std::string(to_string(*N.type)) : std::string("unclassified")));
  }
  return N;
}

/// The 22 names in a fixed order: E, A, C, Q8, D_lambda, D_rho.
inline std::vector<StructureName> all_names() {
  std::vector<StructureName> out;
  out.push_back({Family::E, Symbol::Sigma, Symbol::Tau});
  out.push_back({Family::E, Symbol::Tau, Symbol::Sigma});
  for (Family f : {Family::A, Family::C}) {
    for (Symbol s : kSymbols) {
      for (Symbol t : kSymbols) {
        if (s != t) out.push_back({f, s, t});
      }
    }
  }
  out.push_back({Family::Q8Rho, std::nullopt, std::nullopt});
  out.push_back({Family::Q8Lambda, std::nullopt, std::nullopt});
  for (Family f : {Family::DLambda, Family::DRho}) {
    for (Symbol s : kSymbols) out.push_back({f, s, std::nullopt});
  }
  return out;
}

inline std::vector<RegularSubgroup> all_named(const FiniteGroup& G) {
  require_q8(G);
  std::vector<RegularSubgroup> out;
  for (const auto& n : all_names()) out.push_back(build(n, G));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) throw VerificationError(*out[i].name + " coincides with " + *out[j].name);
    }
  }
  return out;
}

/// The name whose subgroup equals N, if any (Q8 only).
inline std::optional<StructureName> match_name(const std::vector<Perm>& elements, const FiniteGroup& G) {
  if (!is_quaternion_group(G)) return std::nullopt;
  for (const auto& n : all_names()) {
    if (closure(lemma_generators(n, G)) == elements) return n;
  }
  return std::nullopt;
}

/// k with lambda(g) eta_{s,t} lambda(g)^-1 = eta_{s,t}^k, for g in {s, t}.
inline int conjugation_exponent(const StructureName& name, Symbol g, const FiniteGroup& G) {
  if (name.family != Family::C) throw InputError("conjugation_exponent needs a C-family name");
  name.validate();
  if (g != *name.s && g != *name.t) throw InputError("conjugation_exponent: g must be s or t");
  const Perm e = eta(G, *name.s, *name.t);
  const Perm conj = e.conjugated_by(lambda_of(G, element_of(G, g)));
  for (int k = 0; k < 8; ++k) {
    if (e.pow(k) == conj) return k;
  }
  throw VerificationError("conjugate of eta is not a power of eta");
}

}  // namespace hopfq8
