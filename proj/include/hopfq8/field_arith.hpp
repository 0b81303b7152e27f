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

// Square classes of Q, Hilbert symbols at every place, quaternion algebras
// over Q up to isomorphism, and invariants of diagonal ternary forms.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfq8/rational.hpp"

namespace hopfq8 {

/// A place of Q: a prime, or the infinite place (stored as 0).
using Place = std::int64_t;
inline constexpr Place kInfinity = 0;

inline std::string place_string(Place v) { return v == kInfinity ? "inf" : std::to_string(v); }

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// An element of Q^x / (Q^x)^2, represented by its square-free integer.
class SquareClass {
 public:
  SquareClass() = default;
  explicit SquareClass(std::int64_t value) : rep_(squarefree_part(Integer(value))) {}
  explicit SquareClass(const Rational& value) : rep_(squarefree_part(value)) {}

  std::int64_t rep() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }

  SquareClass operator*(const SquareClass& o) const {
    const Integer product = Integer(rep_) * o.rep_;
    return SquareClass(product);
  }

  auto operator<=>(const SquareClass&) const = default;

 private:
  explicit SquareClass(const Integer& value) : rep_(squarefree_part(value)) {}
  std::int64_t rep_ = 1;
};

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

/// Splits x = p^e * u with p not dividing u.
inline std::pair<int, std::int64_t> split_valuation(std::int64_t x, std::int64_t p) {
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return {e, x};
}

/// Legendre symbol (u/p) for odd prime p and p not dividing u, via Euler's criterion.
inline int legendre(std::int64_t u, std::int64_t p) {
  return powmod(u, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int mod8(std::int64_t u) { return static_cast<int>(((u % 8) + 8) % 8); }
inline int eps2(std::int64_t u) { return ((mod8(u) - 1) / 2) % 2; }  // (u-1)/2 mod 2
inline int omega2(std::int64_t u) {                                   // (u^2-1)/8 mod 2
  const int r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace detail

/// Local Hilbert symbol (x, y)_v in {+1, -1}.
inline int hilbert_symbol(std::int64_t x, std::int64_t y, Place v) {
  if (x == 0 || y == 0) throw InputError("Hilbert symbol of zero");
  if (v == kInfinity) return (x < 0 && y < 0) ? -1 : 1;
  if (!is_prime(v)) throw InputError("place is neither a prime nor infinity: " + std::to_string(v));
  const auto [a, u] = detail::split_valuation(x, v);
  const auto [b, w] = detail::split_valuation(y, v);
  if (v == 2) {
    const int e = detail::eps2(u) * detail::eps2(w) + a * detail::omega2(w) + b * detail::omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int sign = ((a * b) % 2 == 1 && ((v - 1) / 2) % 2 == 1) ? -1 : 1;
  if (b % 2 == 1) sign *= detail::legendre(u, v);
  if (a % 2 == 1) sign *= detail::legendre(w, v);
  return sign;
}

inline int hilbert_symbol(const SquareClass& x, const SquareClass& y, Place v) {
  return hilbert_symbol(x.rep(), y.rep(), v);
}

/// Places where (x, y)_v = -1: primes ascending, then inf.
inline std::vector<Place> ramification_set(std::int64_t x, std::int64_t y) {
  std::vector<Place> places{2};
  for (std::int64_t p : prime_divisors(squarefree_part(Integer(x)) * squarefree_part(Integer(y)))) {
    if (p != 2) places.push_back(p);
  }
  std::sort(places.begin(), places.end());
  places.push_back(kInfinity);
  std::vector<Place> out;
  for (Place v : places) {
    if (hilbert_symbol(x, y, v) == -1) out.push_back(v);
  }
  return out;
}

inline std::vector<Place> ramification_set(const SquareClass& x, const SquareClass& y) {
  return ramification_set(x.rep(), y.rep());
}

inline std::string places_string(const std::vector<Place>& places) {
  std::string s = "{";
  for (std::size_t i = 0; i < places.size(); ++i) s += (i ? "," : "") + place_string(places[i]);
  return s + "}";
}

/// The quaternion algebra (x, y)_Q.
struct QuaternionClass {
  SquareClass x, y;

  QuaternionClass(SquareClass x_, SquareClass y_) : x(x_), y(y_) {}
  QuaternionClass(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

  std::vector<Place> ramified() const { return ramification_set(x, y); }
  bool is_split() const { return ramified().empty(); }
};

inline bool quat_isomorphic(const QuaternionClass& q1, const QuaternionClass& q2) {
  return q1.ramified() == q2.ramified();
}

/// Both sides of: (-1,x) = (-1,xy) if and only if (-1,y) is split.
struct BiconditionalReport {
  bool left = false;
  bool right = false;
  bool agree() const { return left == right; }
};

inline BiconditionalReport lemma_4_10_check(const SquareClass& x, const SquareClass& y) {
  BiconditionalReport r;
  r.left = quat_isomorphic(QuaternionClass(SquareClass(-1), x), QuaternionClass(SquareClass(-1), x * y));
  r.right = QuaternionClass(SquareClass(-1), y).is_split();
  return r;
}

/// Diagonal form <d0, d1, d2> over Q.
struct TernaryForm {
  std::array<std::int64_t, 3> diag{1, 1, 1};

  explicit TernaryForm(std::array<std::int64_t, 3> d) : diag(d) {
    for (auto c : diag) {
      if (c == 0) throw InputError("ternary form coefficient is zero");
    }
  }

  SquareClass discriminant() const {
    return SquareClass(diag[0]) * SquareClass(diag[1]) * SquareClass(diag[2]);
  }

  /// (#positive, #negative)
  std::pair<int, int> signature() const {
    int pos = 0;
    for (auto c : diag) pos += c > 0;
    return {pos, 3 - pos};
  }

  std::string to_string() const {
    return "<" + std::to_string(diag[0]) + "," + std::to_string(diag[1]) + "," + std::to_string(diag[2]) + ">";
  }
};

inline int hasse_invariant(const TernaryForm& f, Place v) {
  int h = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) h *= hilbert_symbol(f.diag[i], f.diag[j], v);
  }
  return h;
}

/// Places where Hasse invariants can differ between f1 and f2.
inline std::vector<Place> comparison_places(const TernaryForm& f1, const TernaryForm& f2) {
  std::vector<Place> places{2};
  for (const auto* f : {&f1, &f2}) {
    for (auto c : f->diag) {
      for (auto p : prime_divisors(c)) places.push_back(p);
    }
  }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  places.push_back(kInfinity);
  return places;
}

struct FormComparison {
  bool discriminant = false;
  bool signature = false;
  std::vector<std::pair<Place, std::pair<int, int>>> hasse;  // per place: (f1, f2)
  bool equivalent() const {
    return discriminant && signature &&
           std::all_of(hasse.begin(), hasse.end(), [](const auto& e) { return e.second.first == e.second.second; });
  }
};

inline FormComparison compare_forms(const TernaryForm& f1, const TernaryForm& f2) {
  FormComparison c;
  c.discriminant = f1.discriminant() == f2.discriminant();
  c.signature = f1.signature() == f2.signature();
  for (Place v : comparison_places(f1, f2)) c.hasse.push_back({v, {hasse_invariant(f1, v), hasse_invariant(f2, v)}});
  return c;
}

inline bool forms_equivalent(const TernaryForm& f1, const TernaryForm& f2) { return compare_forms(f1, f2).equivalent(); }

inline void require_biquadratic(const SquareClass& a, const SquareClass& b) {
  if (a.is_trivial() || b.is_trivial() || (a * b).is_trivial()) {
    throw InputError("a, b and ab must all be non-squares (K must be biquadratic)");
  }
}

/// Whether <a, b, ab> is equivalent to <1, 1, 1> over Q.
inline FormComparison embeddability_breakdown(const SquareClass& a, const SquareClass& b) {
  require_biquadratic(a, b);
  return compare_forms(TernaryForm({a.rep(), b.rep(), (a * b).rep()}), TernaryForm({1, 1, 1}));
}

inline bool witt_embeddable(const SquareClass& a, const SquareClass& b) {
  return embeddability_breakdown(a, b).equivalent();
}

/// Whether c is a square in Q(sqrt d).
inline bool square_in_quadratic(const SquareClass& c, const SquareClass& d) {
  if (d.is_trivial()) throw InputError("square_in_quadratic: d must be a non-square");
  return c.is_trivial() || c == d;
}

}  // namespace hopfq8
