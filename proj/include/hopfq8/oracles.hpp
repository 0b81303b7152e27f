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

// Brute-force local solvability of z^2 = x u^2 + y v^2, used to check the
// closed-form Hilbert symbol.

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "hopfq8/field_arith.hpp"

namespace hopfq8::oracle {

/// Residues that are squares modulo m, by squaring every residue.
inline std::vector<bool> square_table(std::int64_t m) {
  std::vector<bool> t(static_cast<std::size_t>(m), false);
  for (std::int64_t z = 0; z < m; ++z) t[static_cast<std::size_t>(detail::mulmod(z, z, m))] = true;
  return t;
}

/// Modulus for the search at p: p^(v_p(4xy)+3) for odd p, 2^(v_2(4xy)+5).
inline std::int64_t search_modulus(std::int64_t x, std::int64_t y, std::int64_t p) {
  const int e = detail::split_valuation(4 * x * y, p).first + (p == 2 ? 5 : 3);
  std::int64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  return m;
}

namespace detail_oracle {

inline constexpr std::int64_t kTableLimit = std::int64_t{1} << 22;

/// Square test modulo m = p^k. Small moduli use a full table. Larger odd
/// moduli reduce to a square test of the unit part modulo p (Hensel lifting
/// for odd p), where the residues mod p are again tabulated.
class SquareTest {
 public:
  SquareTest(std::int64_t p, std::int64_t m) : p_(p), m_(m) {
    if (m <= kTableLimit) {
      table_ = square_table(m);
    } else {
      if (p == 2) throw InputError("2-adic search modulus too large");
      table_ = square_table(p);
    }
  }

  /// Expects 0 <= c < m.
  bool operator()(std::int64_t c) const {
    if (m_ <= kTableLimit) return table_[static_cast<std::size_t>(c)];
    if (c == 0) return true;
    int e = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++e;
    }
    return e % 2 == 0 && table_[static_cast<std::size_t>(c % p_)];
  }

 private:
  std::int64_t p_, m_;
  std::vector<bool> table_;
};

}  // namespace detail_oracle

/// Whether z^2 = x u^2 + y v^2 has a solution modulo p^k with (u, v, z) not
/// all divisible by p. In such a solution u or v is a unit, so after scaling
/// either u = 1, or v = 1 with p | u.
inline bool locally_solvable(std::int64_t x, std::int64_t y, Place p) {
  if (x == 0 || y == 0) throw InputError("local solvability with a zero coefficient");
  if (p == kInfinity) return x > 0 || y > 0;
  if (!is_prime(p)) throw InputError("place is neither a prime nor infinity");
  const std::int64_t m = search_modulus(x, y, p);
  const detail_oracle::SquareTest is_square(p, m);
  const std::int64_t xm = ((x % m) + m) % m, ym = ((y % m) + m) % m;
  if (m > 3'000'000'000LL) throw InputError("search modulus too large for 64-bit residues");
  // t = y v^2 and d = y (2v + 1) mod m, advanced by additions only
  std::int64_t t = 0, d = ym, step = (2 * ym) % m;
  for (std::int64_t v = 0; v < m; ++v) {
    std::int64_t c = xm + t;
    if (c >= m) c -= m;
    if (is_square(c)) return true;
    t += d;
    if (t >= m) t -= m;
    d += step;
    if (d >= m) d -= m;
  }
  for (std::int64_t u = 0; u < m; u += p) {
    if (is_square((xm * (u * u % m) + ym) % m)) return true;
  }
  return false;
}

inline int brute_force_hilbert(std::int64_t x, std::int64_t y, Place p) { return locally_solvable(x, y, p) ? 1 : -1; }

/// Memoized brute-force symbol. Inputs with equal p-valuations whose unit
/// parts agree modulo squares (residue class mod p for odd p, mod 8 at 2)
/// differ by a unit square modulo the search modulus, so the substitution
/// u -> u w maps one solution set onto the other and the cached answer is exact.
class CachedHilbert {
 public:
  int operator()(std::int64_t x, std::int64_t y, Place p) {
    if (p == kInfinity || !is_prime(p)) return brute_force_hilbert(x, y, p);
    const auto key = std::make_tuple(p, class_key(x, p), class_key(y, p));
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const int r = brute_force_hilbert(x, y, p);
    std::lock_guard lock(mu_);
    cache_.emplace(key, r);
    return r;
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::pair<int, std::int64_t> class_key(std::int64_t x, std::int64_t p) {
    auto [e, u] = detail::split_valuation(x, p);
    if (p == 2) return {e, ((u % 8) + 8) % 8};
    const auto& squares = residue_squares(p);
    const std::int64_t r = ((u % p) + p) % p;
    return {e, squares[static_cast<std::size_t>(r)] ? 1 : -1};
  }

  const std::vector<bool>& residue_squares(std::int64_t p) {
    std::lock_guard lock(mu_);
    auto it = tables_.find(p);
    if (it == tables_.end()) it = tables_.emplace(p, square_table(p)).first;
    return it->second;
  }

  std::mutex mu_;
  std::map<std::tuple<Place, std::pair<int, std::int64_t>, std::pair<int, std::int64_t>>, int> cache_;
  std::map<std::int64_t, std::vector<bool>> tables_;
};

/// All places where the symbol can be -1: 2, odd primes dividing xy, inf.
inline std::vector<Place> relevant_places(std::int64_t x, std::int64_t y) {
  std::vector<Place> places{2};
  for (auto q : prime_divisors(x)) places.push_back(q);
  for (auto q : prime_divisors(y)) places.push_back(q);
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  places.push_back(kInfinity);
  return places;
}

}  // namespace hopfq8::oracle
