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


// Univariate polynomials over Q and factorization into irreducibles.

#pragma once

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "hopfq8/linalg.hpp"

namespace hopfq8 {

/// Coefficients from the constant term upward, with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& r) { return Poly(Vec{r}); }
  static Poly x() { return Poly(Vec{Rational(0), Rational(1)}); }

  const Vec& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Poly monic() const {
    if (is_zero()) throw InputError("monic of the zero polynomial");
    return (1 / lead()) * *this;
  }

  friend Poly operator*(const Rational& r, const Poly& p) { return Poly(r * p.c_); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Vec c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vec c = zero_vec(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const {
    Vec d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long long>(i)) * c_[i]);
    return Poly(std::move(d));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Rational& k = c_[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      const bool neg = k < 0;
      const Rational mag = neg ? Rational(-k) : k;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mag != 1 || i == 0) s += hopfq8::to_string(mag) + (i ? "*" : "");
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Vec c_;
};

struct PolyDivision {
  Poly quotient, remainder;
};

inline PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Vec q = zero_vec(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  Vec r = a.coeffs();
  const Rational inv = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Rational f = r[top] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(k + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

/// Monic gcd.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// s with s * a = 1 modulo m, for a coprime to m.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a % m, s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw InputError("inverse_mod: not coprime");
  return ((1 / r0.lead()) * s0) % m;
}

inline bool is_squarefree(const Poly& f) { return gcd(f, f.derivative()).degree() == 0; }

namespace detail {

using Complex = boost::multiprecision::cpp_complex_100;
using Real = boost::multiprecision::cpp_bin_float_100;

/// All complex roots of a monic integer polynomial (Weierstrass iteration).
inline std::vector<Complex> numeric_roots(const Poly& g) {
  const int n = g.degree();
  Real bound = 1;
  for (int i = 0; i < n; ++i) {
    Real m = abs(Real(g[static_cast<std::size_t>(i)]));
    if (m + 1 > bound) bound = m + 1;
  }
  auto eval = [&](const Complex& z) {
    Complex v = 1;
    for (int i = n - 1; i >= 0; --i) v = v * z + Complex(Real(g[static_cast<std::size_t>(i)]));
    return v;
  };
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(Real("0.4"), Real("0.9"));
  Complex w = 1;
  for (auto& r : z) {
    w *= seed;
    r = w * bound;
  }
  const Real tol("1e-80");
  for (int iter = 0; iter < 5000; ++iter) {
    Real change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex den = 1;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      const Complex step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, Real(abs(step)));
    }
    if (change < tol) break;
  }
  return z;
}

/// Rounds the product of (y - z_i) to an integer polynomial if it is close to one.
inline std::optional<Poly> integer_candidate(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1)};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  Vec out;
  const Real tol("1e-30");
  for (const auto& k : c) {
    const Real re = k.real(), rounded = round(re);
    if (abs(k.imag()) > tol * (1 + abs(re)) || abs(re - rounded) > tol * (1 + abs(re))) return std::nullopt;
    out.emplace_back(Integer(rounded.convert_to<Integer>()));
  }
  return Poly(std::move(out));
}

}  // namespace detail

/// Monic irreducible factors of a square-free polynomial, sorted by degree
/// then coefficients. Candidate factors come from numerically computed roots
/// and are kept only if they divide exactly, so the result is exact; the
/// smallest dividing subset through a fixed root is irreducible.
inline std::vector<Poly> factor_squarefree(const Poly& f_in) {
  if (f_in.degree() < 1) throw InputError("factor: degree must be positive");
  if (!is_squarefree(f_in)) throw InputError("factor: polynomial is not square-free");
  const Poly f = f_in.monic();
  const int n = f.degree();
  // g(y) = D^n f(y / D) is monic with integer coefficients
  Integer D = 1;
  for (const auto& k : f.coeffs()) D = boost::multiprecision::lcm(D, denominator_of(k));
  Vec gc(static_cast<std::size_t>(n + 1));
  Integer pw = 1;
  for (int i = n; i >= 0; --i) {
    gc[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * Rational(pw);
    pw *= D;
  }
  Poly g(gc);
  std::vector<detail::Complex> roots = detail::numeric_roots(g);
  std::vector<Poly> factors;
  while (g.degree() > 0) {
    const std::size_t m = roots.size();
    bool found = false;
    for (std::size_t size = 1; size <= m && !found; ++size) {
      // subsets of the given size containing root 0, as bitmasks over 1..m-1
      std::vector<bool> pick(m - 1, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size - 1), true);
      do {
        std::vector<detail::Complex> sub{roots[0]};
        for (std::size_t i = 0; i + 1 < m; ++i) {
          if (pick[i]) sub.push_back(roots[i + 1]);
        }
        auto cand = detail::integer_candidate(sub);
        if (!cand) continue;
        auto [q, r] = divmod(g, *cand);
        if (!r.is_zero()) continue;
        factors.push_back(*cand);
        g = q;
        std::vector<detail::Complex> rest;
        for (std::size_t i = 0; i + 1 < m; ++i) {
          if (!pick[i]) rest.push_back(roots[i + 1]);
        }
        roots = std::move(rest);
        found = true;
        break;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (!found) throw VerificationError("factor: numeric root proposal failed");
  }
  // back to x = y / D: h(D x) / D^deg h
  std::vector<Poly> out;
  for (const auto& h : factors) {
    Vec c(static_cast<std::size_t>(h.degree() + 1));
    Rational scale = 1;
    for (int i = 0; i <= h.degree(); ++i) {
      c[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] * scale;
      scale *= Rational(D);
    }
    out.push_back(Poly(std::move(c)).monic());
  }
  Poly check = Poly::constant(1);
  for (const auto& h : out) check = check * h;
  if (!(check == f)) throw VerificationError("factor: product check failed");
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace hopfq8
