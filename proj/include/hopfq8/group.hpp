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

// Finite groups given by Cayley tables, permutations of their underlying
// sets, and the left/right regular representations.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hopfq8/errors.hpp"

namespace hopfq8 {

/// A permutation of {0, ..., n-1}, n <= 16, stored as its image array.
/// Composition `p * q` applies q first: (p * q)[x] = p[q[x]].
class Perm {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Perm() = default;

  explicit Perm(std::span<const int> image) : n_(static_cast<std::uint8_t>(image.size())) {
    if (image.size() > kMaxDegree) throw InputError("permutation degree exceeds 16");
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < image.size(); ++i) {
      const int y = image[i];
      if (y < 0 || static_cast<std::size_t>(y) >= image.size() || seen[y]) {
        throw InputError("image array is not a bijection");
      }
      seen[y] = true;
      img_[i] = static_cast<std::uint8_t>(y);
    }
  }

  Perm(std::initializer_list<int> image) : Perm(std::span<const int>(image.begin(), image.size())) {}

  static Perm identity(std::size_t n) {
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Builds the permutation with a single cycle listed by its points.
  static Perm from_cycle(std::size_t n, std::span<const int> cycle) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image.at(static_cast<std::size_t>(cycle[i])) = cycle[(i + 1) % cycle.size()];
    }
    return Perm(std::span<const int>(image));
  }

  std::size_t degree() const { return n_; }
  int operator[](std::size_t x) const { return img_[x]; }

  Perm operator*(const Perm& rhs) const {
    Perm r;
    r.n_ = n_;
    for (std::size_t i = 0; i < n_; ++i) r.img_[i] = img_[rhs.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.n_ = n_;
    for (std::size_t i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  /// g * this * g^-1
  Perm conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n_; ++i) c += (img_[i] == i);
    return c;
  }

  /// Cycle lengths, sorted descending (fixed points included as 1-cycles).
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  std::size_t order() const {
    std::size_t l = 1;
    for (int c : cycle_type()) l = std::lcm(l, static_cast<std::size_t>(c));
    return l;
  }

  Perm pow(int k) const {
    const int ord = static_cast<int>(order());
    k = ((k % ord) + ord) % ord;
    Perm r = identity(n_);
    for (int i = 0; i < k; ++i) r = (*this) * r;
    return r;
  }

  std::vector<int> image() const { return {img_.begin(), img_.begin() + n_}; }

  /// Cycle notation without 1-cycles, e.g. "(0 1 2 3)(4 5 6 7)"; "()" for the identity.
  std::string cycle_string() const {
    std::ostringstream os;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i] || img_[i] == i) continue;
      os << '(';
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (j != i) os << ' ';
        os << j;
      }
      os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n_; ++i) {
      h ^= img_[i];
      h *= 1099511628211ULL;
    }
    return h;
  }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t n_ = 0;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

inline void to_json(nlohmann::json& j, const Perm& p) { j = p.image(); }

/// A finite group presented by its Cayley table. Immutable; validated eagerly.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
              std::vector<int> generators, std::vector<std::string> generator_symbols = {})
      : table_(std::move(table)),
        names_(std::move(names)),
        generators_(std::move(generators)),
        generator_symbols_(std::move(generator_symbols)) {
    validate();
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[check(a)][check(b)]; }
  int inverse(int a) const { return inverse_[check(a)]; }
  const std::string& name(int a) const { return names_[check(a)]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& generator_symbols() const { return generator_symbols_; }

  int power(int a, int k) const {
    int r = identity_;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  /// Sorted element indices of the cyclic subgroup <a>.
  std::vector<int> cyclic_subgroup(int a) const {
    std::vector<int> out{identity_};
    for (int x = a; x != identity_; x = mul(x, a)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a) {
      for (int b = 0; b < order(); ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  int check(int a) const {
    if (a < 0 || a >= order()) throw InputError("group element index out of range: " + std::to_string(a));
    return a;
  }

 private:
  void validate() {
    const std::size_t n = table_.size();
    if (n == 0) throw InputError("group order must be positive");
    if (n > Perm::kMaxDegree) throw InputError("group order exceeds 16");
    if (names_.empty()) {
      for (std::size_t i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
    }
    if (names_.size() != n) throw InputError("names length differs from group order");
    for (const auto& row : table_) {
      if (row.size() != n) throw InputError("Cayley table is not square");
      std::vector<bool> seen(n, false);
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
          throw InputError("Cayley table row is not a permutation of the indices");
        }
        seen[v] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      for (std::size_t r = 0; r < n; ++r) {
        const int v = table_[r][c];
        if (seen[v]) throw InputError("Cayley table column is not a permutation of the indices");
        seen[v] = true;
      }
    }
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
      }
      if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw InputError("Cayley table has no identity element");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw InputError("Cayley table is not associative");
          }
        }
      }
    }
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == identity_) inverse_[a] = static_cast<int>(b);
      }
    }
    for (int g : generators_) check(g);
    if (generators_.empty()) generators_ = greedy_generators();
    // the generators must generate the whole group
    std::vector<bool> reached(n, false);
    std::vector<int> frontier{identity_};
    reached[identity_] = true;
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      for (int g : generators_) {
        const int y = table_[g][x];
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
    }
    if (std::count(reached.begin(), reached.end(), true) != static_cast<long>(n)) {
      throw InputError("designated generators do not generate the group");
    }
  }

  std::vector<int> greedy_generators() const {
    const int n = order();
    std::vector<int> gens;
    std::vector<bool> in(n, false);
    in[identity_] = true;
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      in[x] = true;
      for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; ++a) {
          if (!in[a]) continue;
          for (int g : gens) {
            const int y = table_[g][a];
            if (!in[y]) in[y] = grew = true;
          }
        }
      }
    }
    return gens;
  }

  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> generators_;
  std::vector<std::string> generator_symbols_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Index of sigma^i tau^j in the quaternion group preset.
constexpr int q8_index(int i, int j) { return ((i % 4) + 4) % 4 + 4 * j; }

/// The quaternion group <sigma, tau | sigma^4 = tau^4 = 1, sigma^2 = tau^2,
/// sigma tau = tau sigma^-1> with idx(sigma^i tau^j) = i + 4j.
inline FiniteGroup q8_preset() {
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int i = x % 4, a = x / 4, j = y % 4, b = y / 4;
      // (s^i t^a)(s^j t^b) = s^(i + (-1)^a j) t^(a+b), with t^2 = s^2
      int e = i + (a == 0 ? j : -j);
      int tpow = a + b;
      if (tpow == 2) {
        tpow = 0;
        e += 2;
      }
      table[x][y] = q8_index(e, tpow);
    }
  }
  std::vector<std::string> names{"1", "s", "s^2", "s^3", "t", "st", "s^2t", "s^3t"};
  return FiniteGroup(std::move(table), std::move(names), {1, 4}, {"sigma", "tau"});
}

/// Parses {"order": n, "table": [[...]], "names": [...], "generators": [...]}.
inline FiniteGroup group_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n) throw InputError("table size differs from declared order");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::vector<int> gens;
    if (j.contains("generators")) gens = j.at("generators").get<std::vector<int>>();
    return FiniteGroup(std::move(table), std::move(names), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group JSON: ") + e.what());
  }
}

inline FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("group file is not valid JSON: ") + e.what());
  }
  return group_from_json(j);
}

/// lambda(g)[x] = g x
inline Perm lambda_of(const FiniteGroup& G, int g) {
  G.check(g);
  std::vector<int> image(G.order());
  for (int x = 0; x < G.order(); ++x) image[x] = G.mul(g, x);
  return Perm(std::span<const int>(image));
}

/// rho(g)[x] = x g^-1
inline Perm rho_of(const FiniteGroup& G, int g) {
  G.check(g);
  const int gi = G.inverse(g);
  std::vector<int> image(G.order());
  for (int x = 0; x < G.order(); ++x) image[x] = G.mul(x, gi);
  return Perm(std::span<const int>(image));
}

inline std::vector<Perm> lambda_image(const FiniteGroup& G) {
  std::vector<Perm> out;
  for (int g = 0; g < G.order(); ++g) out.push_back(lambda_of(G, g));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Perm> rho_image(const FiniteGroup& G) {
  std::vector<Perm> out;
  for (int g = 0; g < G.order(); ++g) out.push_back(rho_of(G, g));
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest subgroup containing `gens`, in canonical (sorted) order.
/// A nonzero `cap` bounds the size; exceeding it throws ClosureCapExceeded.
inline std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t cap = 0) {
  if (gens.empty()) throw InputError("closure of an empty generator list");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw InputError("generators act on different point sets");
  }
  std::vector<Perm> elems{Perm::identity(n)};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = g * elems[i];
      if (std::find(elems.begin(), elems.end(), y) == elems.end()) {
        elems.push_back(y);
        if (cap != 0 && elems.size() > cap) {
          throw ClosureCapExceeded("closure exceeded cap of " + std::to_string(cap));
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline bool contains(const std::vector<Perm>& sorted_set, const Perm& p) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), p);
}

inline bool is_closed(const std::vector<Perm>& set) {
  if (set.empty()) return false;
  std::vector<Perm> s = set;
  std::sort(s.begin(), s.end());
  for (const auto& a : s) {
    for (const auto& b : s) {
      if (!contains(s, a * b)) return false;
    }
  }
  return true;
}

/// Which of the three regularity properties hold. Any two imply the third for
/// a subgroup, so all three are recorded for cross-checking.
struct RegularityCertificate {
  bool full_order = false;
  bool transitive = false;
  bool trivial_stabilizers = false;

  bool regular() const { return full_order && transitive && trivial_stabilizers; }
};

inline RegularityCertificate regularity(const std::vector<Perm>& N, std::size_t n) {
  if (!is_closed(N)) throw InputError("is_regular: input is not closed under composition");
  RegularityCertificate cert;
  cert.full_order = N.size() == n;
  std::vector<bool> orbit(n, false);
  for (const auto& p : N) orbit[p[0]] = true;
  cert.transitive = std::count(orbit.begin(), orbit.end(), true) == static_cast<long>(n);
  cert.trivial_stabilizers = std::all_of(N.begin(), N.end(), [](const Perm& p) {
    return p.is_identity() || p.fixed_points() == 0;
  });
  return cert;
}

inline bool is_regular(const std::vector<Perm>& N, std::size_t n) { return regularity(N, n).regular(); }

inline bool is_normalized_by_lambda(const std::vector<Perm>& N, const FiniteGroup& G) {
  std::vector<Perm> s = N;
  std::sort(s.begin(), s.end());
  for (int g : G.generators()) {
    const Perm l = lambda_of(G, g);
    for (const auto& p : s) {
      if (!contains(s, p.conjugated_by(l))) return false;
    }
  }
  return true;
}

/// The five isomorphism types of groups of order 8.
enum class GroupType { C2xC2xC2, C4xC2, C8, Q8, D4 };

inline std::string_view to_string(GroupType t) {
  switch (t) {
    case GroupType::C2xC2xC2: return "C2xC2xC2";
    case GroupType::C4xC2: return "C4xC2";
    case GroupType::C8: return "C8";
    case GroupType::Q8: return "Q8";
    case GroupType::D4: return "D4";
  }
  return "?";
}

/// Short label used in summaries ("C2^3" for the elementary abelian type).
inline std::string_view short_label(GroupType t) {
  return t == GroupType::C2xC2xC2 ? "C2^3" : to_string(t);
}

inline GroupType group_type_from_string(std::string_view s) {
  for (auto t : {GroupType::C2xC2xC2, GroupType::C4xC2, GroupType::C8, GroupType::Q8, GroupType::D4}) {
    if (s == to_string(t) || s == short_label(t)) return t;
  }
  throw InputError("unknown group type: " + std::string(s));
}

/// Classifies a group of order 8 by its element-order multiset and commutativity.
inline GroupType classify_type(const std::vector<Perm>& N) {
  if (N.size() != 8) throw InputError("classify_type: only groups of order 8 are classified");
  if (!is_closed(N)) throw InputError("classify_type: input is not a group");
  std::map<std::size_t, int> orders;
  bool abelian = true;
  for (const auto& a : N) {
    ++orders[a.order()];
    for (const auto& b : N) abelian = abelian && (a * b == b * a);
  }
  if (orders[8] > 0) return GroupType::C8;
  if (abelian) return orders[4] == 0 ? GroupType::C2xC2xC2 : GroupType::C4xC2;
  return orders[4] == 6 ? GroupType::Q8 : GroupType::D4;
}

/// Same classification applied to an abstract group of order 8.
inline GroupType classify_type(const FiniteGroup& G) { return classify_type(lambda_image(G)); }

/// Greedy generating set: scan in canonical order, keep elements not yet generated.
inline std::vector<Perm> greedy_generators(const std::vector<Perm>& N) {
  std::vector<Perm> gens;
  std::vector<Perm> span{Perm::identity(N.front().degree())};
  for (const auto& p : N) {
    if (contains(span, p)) continue;
    gens.push_back(p);
    span = closure(gens);
  }
  return gens;
}

/// A regular subgroup of Perm(G) normalized by lambda(G), with its certificates.
struct RegularSubgroup {
  std::vector<Perm> elements;  // canonical sorted order
  std::vector<Perm> generators;
  std::optional<GroupType> type;  // order 8 only
  std::optional<std::string> name;

  bool operator==(const RegularSubgroup& o) const { return elements == o.elements; }
  bool contains(const Perm& p) const { return hopfq8::contains(elements, p); }
  std::size_t size() const { return elements.size(); }
};

/// Validates closure, regularity, and normalization, then classifies (order 8 only).
inline RegularSubgroup make_regular_subgroup(std::vector<Perm> elements, const FiniteGroup& G,
                                             std::vector<Perm> generators = {},
                                             std::optional<std::string> name = std::nullopt) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_regular(elements, static_cast<std::size_t>(G.order()))) {
    throw VerificationError("subgroup is not regular");
  }
  if (!is_normalized_by_lambda(elements, G)) throw VerificationError("subgroup is not normalized by lambda(G)");
  RegularSubgroup N;
  N.generators = generators.empty() ? greedy_generators(elements) : std::move(generators);
  if (elements.size() == 8) N.type = classify_type(elements);
  N.elements = std::move(elements);
  N.name = std::move(name);
  return N;
}

/// Whether G is (isomorphic to) the quaternion group.
inline bool is_quaternion_group(const FiniteGroup& G) {
  return G.order() == 8 && classify_type(G) == GroupType::Q8;
}

}  // namespace hopfq8
