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


// K[N] for a biquadratic field K = Q(alpha0, beta0), the Galois action of G
// on it, the fixed subalgebra, and explicit bases of the fixed subalgebra for
// every named structure together with their multiplication relations.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hopfq8/algebra.hpp"
#include "hopfq8/field_arith.hpp"
#include "hopfq8/named.hpp"

namespace hopfq8 {

/// K = Q(alpha0, beta0) with alpha0^2 = a, beta0^2 = b. sigma fixes alpha0
/// and negates beta0; tau negates alpha0 and fixes beta0. The K-basis is
/// indexed by bit masks: 0 -> 1, 1 -> alpha0, 2 -> beta0, 3 -> alpha0 beta0.
struct BiquadraticModel {
  Rational a, b;

  BiquadraticModel(const Rational& a_, const Rational& b_) : a(a_), b(b_) {
    if (a == 0 || b == 0) throw InputError("field parameters must be nonzero");
    require_biquadratic(SquareClass(a), SquareClass(b));
  }

  /// e_i e_j = coefficient * e_(i xor j).
  Rational product_coefficient(int i, int j) const {
    Rational c = 1;
    if (i & j & 1) c *= a;
    if (i & j & 2) c *= b;
    return c;
  }

  /// Square of the basis element with mask i.
  Rational square(int i) const { return product_coefficient(i, i); }

  std::string label(int i) const {
    static const char* names[] = {"1", "alpha0", "beta0", "alpha0*beta0"};
    return names[i];
  }
};

/// Mask of the basis element fixed by the coset of s (sigma -> alpha0, tau -> beta0).
inline int fixed_mask(Symbol s) {
  switch (s) {
    case Symbol::Sigma: return 1;
    case Symbol::Tau: return 2;
    case Symbol::SigmaTau: return 3;
  }
  return 0;
}

/// K[N] as a 32-dimensional Q-algebra; coordinate 8 * mask + position of n in N.
class KGroupAlgebra {
 public:
  static constexpr std::size_t kDim = 32;

  KGroupAlgebra(const FiniteGroup& G, const RegularSubgroup& N, BiquadraticModel K) : G_(G), N_(N), K_(std::move(K)) {
    require_q8(G_);
    if (N_.size() != 8) throw InputError("K[N] needs a subgroup of order 8");
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) prod_[i][j] = position(N_.elements[i] * N_.elements[j]);
    }
    const int sigma = element_of(G_, Symbol::Sigma), tau = element_of(G_, Symbol::Tau);
    const auto in_sigma = G_.cyclic_subgroup(sigma), in_tau = G_.cyclic_subgroup(tau);
    for (int g = 0; g < 8; ++g) {
      const Perm lg = lambda_of(G_, g);
      for (std::size_t i = 0; i < 8; ++i) conj_[g][i] = position(N_.elements[i].conjugated_by(lg));
      const bool fixes_alpha = std::binary_search(in_sigma.begin(), in_sigma.end(), g);
      const bool fixes_beta = std::binary_search(in_tau.begin(), in_tau.end(), g);
      sign_[g] = {1, fixes_alpha ? 1 : -1, fixes_beta ? 1 : -1, fixes_alpha == fixes_beta ? 1 : -1};
    }
  }

  const FiniteGroup& group() const { return G_; }
  const RegularSubgroup& subgroup() const { return N_; }
  const BiquadraticModel& field() const { return K_; }

  std::size_t position(const Perm& n) const {
    auto it = std::lower_bound(N_.elements.begin(), N_.elements.end(), n);
    if (it == N_.elements.end() || *it != n) throw InputError("permutation " + n.cycle_string() + " is not in N");
    return static_cast<std::size_t>(it - N_.elements.begin());
  }

  /// c * mask * n
  Vec element(const Perm& n, int mask = 0, const Rational& c = 1) const {
    Vec v = zero_vec(kDim);
    v[static_cast<std::size_t>(mask) * 8 + position(n)] = c;
    return v;
  }

  Vec one() const { return element(Perm::identity(8)); }

  /// Left multiplication by the K-basis element with the given mask.
  Vec scale(int mask, const Vec& x) const {
    Vec out = zero_vec(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      if (x[i] == 0) continue;
      const int m = static_cast<int>(i / 8);
      out[static_cast<std::size_t>(m ^ mask) * 8 + i % 8] += K_.product_coefficient(m, mask) * x[i];
    }
    return out;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < kDim; ++j) {
        if (y[j] == 0) continue;
        const int mi = static_cast<int>(i / 8), mj = static_cast<int>(j / 8);
        const std::size_t k = static_cast<std::size_t>(mi ^ mj) * 8 + prod_[i % 8][j % 8];
        out[k] += K_.product_coefficient(mi, mj) * x[i] * y[j];
      }
    }
    return out;
  }

  /// g(c n) = g(c) lambda(g) n lambda(g)^-1
  Vec act(int g, const Vec& x) const {
    Vec out = zero_vec(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      if (x[i] == 0) continue;
      const std::size_t m = i / 8;
      out[m * 8 + conj_[g][i % 8]] += sign_[g][m] * x[i];
    }
    return out;
  }

  bool is_fixed(const Vec& x) const {
    for (int g = 0; g < 8; ++g) {
      if (act(g, x) != x) return false;
    }
    return true;
  }

  /// Checks that every g acts by a ring automorphism and that the action is a left action.
  bool action_is_by_automorphisms() const {
    for (int g = 0; g < 8; ++g) {
      for (std::size_t i = 0; i < kDim; ++i) {
        const Vec ei = unit_vec(kDim, i), gi = act(g, ei);
        for (std::size_t j = 0; j < kDim; ++j) {
          const Vec ej = unit_vec(kDim, j);
          if (act(g, mul(ei, ej)) != mul(gi, act(g, ej))) return false;
        }
        for (int h = 0; h < 8; ++h) {
          if (act(g, act(h, ei)) != act(G_.mul(g, h), ei)) return false;
        }
      }
    }
    return true;
  }

  /// Basis of the fixed subspace: the kernel of the stacked maps g - 1 over the generators.
  Mat fixed_basis() const {
    Mat rows;
    for (int g : G_.generators()) {
      for (std::size_t k = 0; k < kDim; ++k) {
        Vec row = zero_vec(kDim);
        for (std::size_t i = 0; i < kDim; ++i) row[i] = act(g, unit_vec(kDim, i))[k];
        row[k] -= 1;
        rows.push_back(std::move(row));
      }
    }
    return kernel(rows, kDim);
  }

  StructureAlgebra restrict_to_basis(const Mat& basis, std::vector<std::string> labels) const {
    return hopfq8::restrict_to([this](const Vec& x, const Vec& y) { return mul(x, y); }, basis, one(),
                               std::move(labels));
  }

  StructureAlgebra fixed_algebra() const {
    const Mat basis = fixed_basis();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("f" + std::to_string(i));
    return restrict_to_basis(basis, std::move(labels));
  }

 private:
  const FiniteGroup& G_;
  RegularSubgroup N_;
  BiquadraticModel K_;
  std::array<std::array<std::size_t, 8>, 8> prod_{};
  std::array<std::array<std::size_t, 8>, 8> conj_{};
  std::array<std::array<int, 4>, 8> sign_{};
};

/// A labelled basis of the fixed subalgebra, as vectors in K[N].
struct NamedBasis {
  std::vector<std::string> labels;
  Mat vectors;

  const Vec& operator[](const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return vectors[i];
    }
    throw InputError("no basis element " + label);
  }
};

struct RelationCheck {
  std::string section;
  std::string relation;
  bool ok = false;
};

struct TableReport {
  std::string name;
  std::vector<RelationCheck> checks;
  bool basis_fixed = false;
  std::size_t basis_rank = 0;
  std::size_t fixed_dim = 0;

  std::size_t count(const std::string& section) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.section == section; }));
  }
  std::size_t mismatches(const std::string& section) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [&](const auto& c) { return c.section == section && !c.ok; }));
  }
  std::size_t total_mismatches() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.ok; }));
  }
  bool ok() const { return basis_fixed && basis_rank == 8 && fixed_dim == 8 && total_mismatches() == 0; }
};

namespace detail {

/// Symbols (s, t) used by the basis formulas; Q8 families use (sigma, tau).
inline std::pair<Symbol, Symbol> basis_symbols(const StructureName& name) {
  switch (name.family) {
    case Family::Q8Rho:
    case Family::Q8Lambda: return {Symbol::Sigma, Symbol::Tau};
    case Family::DLambda:
    case Family::DRho: return {*name.s, name.aux_t()};
    default: return {*name.s, *name.t};
  }
}

class BasisBuilder {
 public:
  BasisBuilder(const KGroupAlgebra& A, Symbol s, Symbol t) : A_(A), G_(A.group()) {
    s_ = element_of(G_, s);
    t_ = element_of(G_, t);
    alpha_ = fixed_mask(s);
    beta_ = fixed_mask(t);
  }

  int s() const { return s_; }
  int t() const { return t_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int mul(int g, int h) const { return G_.mul(g, h); }
  int inv(int g) const { return G_.inverse(g); }
  Perm lam(int g) const { return lambda_of(G_, g); }
  Perm rho(int g) const { return rho_of(G_, g); }

  Vec sum(const std::vector<std::pair<Rational, Perm>>& terms) const {
    Vec v = zero_vec(KGroupAlgebra::kDim);
    for (const auto& [c, p] : terms) v = v + A_.element(p, 0, c);
    return v;
  }

  /// (1/|S|) sum of sign_i * S_i over a signed list.
  Vec average(const std::vector<Perm>& elems, const std::string& signs) const {
    std::vector<std::pair<Rational, Perm>> terms;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      terms.push_back({Rational(signs[i] == '-' ? -1 : 1, static_cast<long long>(elems.size())), elems[i]});
    }
    return sum(terms);
  }

  Vec scale(int mask, const Vec& x) const { return A_.scale(mask, x); }
  Vec times(const Vec& x, const Vec& y) const { return A_.mul(x, y); }
  Vec of(const Perm& p) const { return A_.element(p); }

  /// Idempotent (1/8) sum chi(n) n for the real character of N/<z> given by
  /// its values on three coset representatives.
  Vec character_idempotent(const std::array<Perm, 3>& reps, const std::array<int, 3>& values) const {
    const Perm z = lam(mul(s_, s_));
    std::vector<std::pair<Rational, Perm>> terms;
    for (const Perm& n : A_.subgroup().elements) {
      int chi = 1;
      for (std::size_t k = 0; k < 3; ++k) {
        if (n == reps[k] || n == reps[k] * z) chi = values[k];
      }
      terms.push_back({Rational(chi, 8), n});
    }
    return sum(terms);
  }

 private:
  const KGroupAlgebra& A_;
  const FiniteGroup& G_;
  int s_ = 0, t_ = 0, alpha_ = 0, beta_ = 0;
};

/// Parameters of the quaternion block spanned by {e, u, v, w}: u^2 = x e, v^2 = y e.
struct QuaternionParameters {
  Rational x, y;
};

}  // namespace detail

/// Quaternion parameters attached to a Q8- or D-family name.
inline detail::QuaternionParameters quaternion_parameters(const StructureName& name, const BiquadraticModel& K) {
  const auto [s, t] = detail::basis_symbols(name);
  const Rational as = K.square(fixed_mask(s)), bt = K.square(fixed_mask(t));
  switch (name.family) {
    case Family::Q8Rho: return {-1, -1};
    case Family::Q8Lambda: return {-as, -bt};
    case Family::DLambda: return {-as, bt};
    case Family::DRho: return {-1, as};
    default: throw InputError(name.to_string() + " has no quaternion block");
  }
}

/// Labelled basis of the fixed subalgebra following the explicit construction for each family.
inline NamedBasis paper_basis(const StructureName& name, const KGroupAlgebra& A) {
  name.validate();
  const auto [s_sym, t_sym] = detail::basis_symbols(name);
  const detail::BasisBuilder B(A, s_sym, t_sym);
  const int s = B.s(), t = B.t(), s2 = B.mul(s, s), st = B.mul(s, t);
  const Perm one = Perm::identity(8);
  NamedBasis nb;
  auto add = [&](std::string label, Vec v) {
    nb.labels.push_back(std::move(label));
    nb.vectors.push_back(std::move(v));
  };
  const Vec half_e = B.sum({{Rational(1, 2), one}, {Rational(-1, 2), B.lam(s2)}});  // (1 - z) / 2

  switch (name.family) {
    case Family::E: {
      const Perm g1 = B.lam(s) * B.rho(t), g2 = B.lam(s2), g3 = B.lam(t) * B.rho(st);
      auto idem = [&](int v1, int v2, int v3) {
        std::vector<std::pair<Rational, Perm>> terms;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
              const int chi = (i ? v1 : 1) * (j ? v2 : 1) * (k ? v3 : 1);
              terms.push_back({Rational(chi, 8), g1.pow(i) * g2.pow(j) * g3.pow(k)});
            }
        return B.sum(terms);
      };
      add("e_chi0", idem(1, 1, 1));
      add("e_chi1", idem(-1, 1, 1));
      add("e_chi3", idem(1, 1, -1));
      add("e_chi1chi3", idem(-1, 1, -1));
      const Vec e2 = idem(1, -1, 1);
      const int reps[] = {0, s, t, st};
      // k * e2 for k in 1, alpha, beta, alpha*beta
      const Vec ke[] = {e2, B.scale(B.alpha(), e2), B.scale(B.beta(), e2), B.scale(B.alpha(), B.scale(B.beta(), e2))};
      const char* labels[] = {"f_1", "f_alpha", "f_beta", "f_alphabeta"};
      for (int k = 0; k < 4; ++k) {
        Vec f = zero_vec(KGroupAlgebra::kDim);
        for (int g : reps) f = f + A.act(g, ke[k]);
        add(labels[k], f);
      }
      break;
    }
    case Family::A: {
      const Perm ls = B.lam(s), lsi = B.lam(B.inv(s)), ls2 = B.lam(s2), rt = B.rho(t), rti = B.rho(B.inv(t));
      const std::vector<Perm> eight{one, ls, ls2, lsi, rti, lsi * rt, rt, ls * rt};
      std::vector<Vec> b;
      b.push_back(B.average(eight, "++++++++"));
      b.push_back(B.average(eight, "+-+--+-+"));
      b.push_back(B.average(eight, "++++----"));
      b.push_back(B.average(eight, "+-+-+-+-"));
      const Rational q(1, 4);
      b.push_back(B.sum({{q, one}, {-q, ls2}, {q, lsi * rt}, {-q, ls * rt}}));
      b.push_back(B.sum({{q, one}, {-q, ls2}, {-q, lsi * rt}, {q, ls * rt}}));
      b.push_back(B.sum({{q, ls}, {-q, lsi}, {-q, rti}, {q, rt}}));
      b.push_back(B.sum({{-q, ls}, {q, lsi}, {-q, rti}, {q, rt}}));
      for (int i = 0; i < 4; ++i) add("a" + std::to_string(i), b[static_cast<std::size_t>(i)]);
      add("a40", b[4] + b[5]);
      add("a41", B.scale(B.alpha(), b[4] - b[5]));
      add("a42", b[6] + b[7]);
      add("a43", B.scale(B.alpha(), b[6] - b[7]));
      break;
    }
    case Family::C: {
      const Perm h = eta(A.group(), s_sym, t_sym);
      std::vector<Perm> pw;
      for (int i = 0; i < 8; ++i) pw.push_back(h.pow(i));
      const Rational q(1, 4), hf(1, 2);
      const Vec b0 = B.average(pw, "++++++++"), b1 = B.average(pw, "+-+-+-+-");
      const Vec b2 = B.sum({{q, pw[0]}, {-q, pw[2]}, {q, pw[4]}, {-q, pw[6]}});
      const Vec b3 = B.sum({{q, pw[1]}, {-q, pw[3]}, {q, pw[5]}, {-q, pw[7]}});
      const Vec b4 = B.sum({{hf, pw[0]}, {-hf, pw[4]}});
      const Vec b5 = B.sum({{hf, pw[3]}, {-hf, pw[7]}});
      const Vec b6 = B.sum({{hf, pw[2]}, {-hf, pw[6]}});
      const Vec b7 = B.sum({{hf, pw[1]}, {-hf, pw[5]}});
      add("a0", b0);
      add("a1", b1);
      add("a20", b2);
      add("a21", B.scale(B.beta(), b3));
      add("a30", b4);
      add("a31", B.scale(B.beta(), b6));
      add("a32", b5 + b7);
      add("a33", B.scale(B.beta(), b5 - b7));
      break;
    }
    case Family::Q8Rho:
    case Family::Q8Lambda:
    case Family::DLambda:
    case Family::DRho: {
      std::array<Perm, 3> reps;
      Vec u, v, w;
      const int a = B.alpha(), b = B.beta();
      if (name.family == Family::Q8Rho) {
        reps = {B.rho(s), B.rho(t), B.rho(st)};
        u = B.times(half_e, B.of(B.rho(s)));
        v = B.times(half_e, B.of(B.rho(t)));
        w = B.times(half_e, B.of(B.rho(st)));
      } else if (name.family == Family::Q8Lambda) {
        reps = {B.lam(s), B.lam(t), B.lam(st)};
        u = B.scale(a, B.times(half_e, B.of(B.lam(s))));
        v = B.scale(b, B.times(half_e, B.of(B.lam(t))));
        w = B.scale(a, B.scale(b, B.times(half_e, B.of(B.lam(st)))));
      } else if (name.family == Family::DLambda) {
        reps = {B.lam(s), B.lam(t) * B.rho(s), B.lam(st) * B.rho(s)};
        u = B.scale(a, B.times(half_e, B.of(B.lam(s))));
        v = B.scale(b, B.times(half_e, B.of(B.lam(t) * B.rho(s))));
        w = B.scale(a, B.scale(b, B.times(half_e, B.of(B.lam(st) * B.rho(s)))));
      } else {
        reps = {B.rho(s), B.lam(s) * B.rho(t), B.lam(s) * B.rho(st)};
        u = B.times(half_e, B.of(B.rho(s)));
        v = B.scale(a, B.times(half_e, B.of(B.lam(s) * B.rho(t))));
        w = B.scale(a, B.times(half_e, B.of(B.lam(s) * B.rho(st))));
      }
      add("e0", B.character_idempotent(reps, {1, 1, 1}));
      add("e1", B.character_idempotent(reps, {1, -1, -1}));
      add("e2", B.character_idempotent(reps, {-1, 1, -1}));
      add("e3", B.character_idempotent(reps, {-1, -1, 1}));
      add("e", half_e);
      add("u", u);
      add("v", v);
      add("w", w);
      break;
    }
  }
  return nb;
}

namespace detail {

class RelationRecorder {
 public:
  RelationRecorder(const KGroupAlgebra& A, const NamedBasis& nb, TableReport& r) : A_(A), nb_(nb), r_(r) {}

  Vec get(const std::string& l) const { return nb_[l]; }

  void product(const std::string& section, const std::string& x, const std::string& y, const Rational& c,
               const std::string& z) {
    const Vec lhs = A_.mul(get(x), get(y));
    const Vec rhs = z.empty() ? zero_vec(KGroupAlgebra::kDim) : c * get(z);
    std::string rel = x + "*" + y + " = ";
    if (z.empty() || c == 0) {
      rel += "0";
    } else {
      rel += (c == 1 ? "" : c == -1 ? "-" : hopfq8::to_string(c) + "*") + z;
    }
    r_.checks.push_back({section, rel, lhs == rhs});
  }

  void equal(const std::string& section, const std::string& relation, const Vec& lhs, const Vec& rhs) {
    r_.checks.push_back({section, relation, lhs == rhs});
  }

  /// Orthogonal idempotents summing to one.
  void idempotents(const std::vector<std::string>& ids) {
    Vec total = zero_vec(KGroupAlgebra::kDim);
    for (const auto& x : ids) {
      total = total + get(x);
      for (const auto& y : ids) product("idempotents", x, y, x == y ? Rational(1) : Rational(0), x == y ? x : "");
    }
    equal("idempotents", "sum = 1", total, A_.one());
  }

  /// Products across distinct blocks vanish.
  void orthogonal_blocks(const std::vector<std::vector<std::string>>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (i == j) continue;
        for (const auto& x : blocks[i]) {
          for (const auto& y : blocks[j]) product("orthogonality", x, y, 0, "");
        }
      }
    }
  }

  /// A square multiplication table, rows and columns in the order of labels.
  void table(const std::string& section, const std::vector<std::string>& labels,
             const std::vector<std::vector<std::pair<Rational, std::string>>>& entries) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        product(section, labels[i], labels[j], entries[i][j].first, entries[i][j].second);
      }
    }
  }

 private:
  const KGroupAlgebra& A_;
  const NamedBasis& nb_;
  TableReport& r_;
};

}  // namespace detail

/// Checks the explicit basis of the fixed subalgebra and all of its stated
/// multiplication relations exactly in K[N].
inline TableReport verify_table(const StructureName& name, const FiniteGroup& G, const BiquadraticModel& K) {
  const RegularSubgroup N = build(name, G);
  const KGroupAlgebra A(G, N, K);
  const NamedBasis nb = paper_basis(name, A);
  TableReport r;
  r.name = name.to_string();
  r.basis_fixed = std::all_of(nb.vectors.begin(), nb.vectors.end(), [&](const Vec& v) { return A.is_fixed(v); });
  r.basis_rank = rank(nb.vectors, KGroupAlgebra::kDim);
  r.fixed_dim = A.fixed_basis().size();
  detail::RelationRecorder rec(A, nb, r);
  const auto [s_sym, t_sym] = detail::basis_symbols(name);
  const detail::BasisBuilder B(A, s_sym, t_sym);
  const int s = B.s(), t = B.t(), s2 = B.mul(s, s);
  const Vec e_expected = B.sum({{Rational(1, 2), Perm::identity(8)}, {Rational(-1, 2), B.lam(s2)}});
  const Vec half_e = name.family == Family::A   ? rec.get("a40")
                     : name.family == Family::C ? rec.get("a30")
                     : name.family == Family::E ? e_expected
                                                : rec.get("e");
  const Rational a = K.square(B.alpha()), b = K.square(B.beta());
  using Entry = std::pair<Rational, std::string>;

  switch (name.family) {
    case Family::E: {
      rec.idempotents({"e_chi0", "e_chi1", "e_chi3", "e_chi1chi3", "f_1"});
      const std::vector<std::string> f{"f_1", "f_alpha", "f_beta", "f_alphabeta"};
      const int masks[] = {0, 1, 2, 3};  // relative to (alpha, beta)
      std::vector<std::vector<Entry>> tab(4, std::vector<Entry>(4));
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          Rational c = 1;
          if (masks[i] & masks[j] & 1) c *= a;
          if (masks[i] & masks[j] & 2) c *= b;
          tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {c, f[static_cast<std::size_t>(masks[i] ^ masks[j])]};
        }
      }
      rec.table("field", f, tab);
      rec.orthogonal_blocks({{"e_chi0"}, {"e_chi1"}, {"e_chi3"}, {"e_chi1chi3"}, f});
      break;
    }
    case Family::A: {
      rec.idempotents({"a0", "a1", "a2", "a3", "a40"});
      const std::vector<std::string> l{"a40", "a41", "a42", "a43"};
      rec.table("table", l,
                {{{1, "a40"}, {1, "a41"}, {1, "a42"}, {1, "a43"}},
                 {{1, "a41"}, {a, "a40"}, {1, "a43"}, {a, "a42"}},
                 {{1, "a42"}, {1, "a43"}, {-1, "a40"}, {-1, "a41"}},
                 {{1, "a43"}, {a, "a42"}, {-1, "a41"}, {-a, "a40"}}});
      rec.orthogonal_blocks({{"a0"}, {"a1"}, {"a2"}, {"a3"}, l});
      const Perm ls = B.lam(s), rt = B.rho(t);
      rec.equal("identities", "a40 = (1 - lambda(s^2))/2", half_e, e_expected);
      rec.equal("identities", "a41 = -alpha*e*lambda(s)rho(t)", rec.get("a41"),
                Rational(-1) * B.scale(B.alpha(), B.times(e_expected, B.of(ls * rt))));
      rec.equal("identities", "a42 = e*rho(t)", rec.get("a42"), B.times(e_expected, B.of(rt)));
      rec.equal("identities", "a43 = alpha*e*lambda(s)", rec.get("a43"),
                B.scale(B.alpha(), B.times(e_expected, B.of(ls))));
      break;
    }
    case Family::C: {
      rec.idempotents({"a0", "a1", "a20", "a30"});
      rec.table("table.2", {"a20", "a21"}, {{{1, "a20"}, {1, "a21"}}, {{1, "a21"}, {-b, "a20"}}});
      rec.table("table.3", {"a30", "a31", "a32", "a33"},
                {{{1, "a30"}, {1, "a31"}, {1, "a32"}, {1, "a33"}},
                 {{1, "a31"}, {-b, "a30"}, {1, "a33"}, {-b, "a32"}},
                 {{1, "a32"}, {1, "a33"}, {-2, "a30"}, {-2, "a31"}},
                 {{1, "a33"}, {-b, "a32"}, {-2, "a31"}, {2 * b, "a30"}}});
      rec.orthogonal_blocks({{"a0"}, {"a1"}, {"a20", "a21"}, {"a30", "a31", "a32", "a33"}});
      const Perm h = eta(G, s_sym, t_sym);
      rec.equal("identities", "a21 = beta*b2*eta", rec.get("a21"), B.scale(B.beta(), B.times(rec.get("a20"), B.of(h))));
      rec.equal("identities", "a30 = (1 - eta^4)/2", half_e, B.sum({{Rational(1, 2), h.pow(0)}, {Rational(-1, 2), h.pow(4)}}));
      rec.equal("identities", "a31 = beta*e*eta^2", rec.get("a31"), B.scale(B.beta(), B.times(half_e, B.of(h.pow(2)))));
      rec.equal("identities", "a32 = e*(eta + eta^3)", rec.get("a32"),
                B.times(half_e, B.of(h) + B.of(h.pow(3))));
      rec.equal("identities", "a33 = beta*e*(eta^3 - eta)", rec.get("a33"),
                B.scale(B.beta(), B.times(half_e, B.of(h.pow(3)) - B.of(h))));
      break;
    }
    default: {
      rec.idempotents({"e0", "e1", "e2", "e3", "e"});
      const auto [x, y] = quaternion_parameters(name, K);
      for (const char* g : {"u", "v", "w"}) {
        rec.product("quaternion", "e", g, 1, g);
        rec.product("quaternion", g, "e", 1, g);
      }
      rec.product("quaternion", "u", "u", x, "e");
      rec.product("quaternion", "v", "v", y, "e");
      rec.product("quaternion", "u", "v", 1, "w");
      rec.product("quaternion", "v", "u", -1, "w");
      rec.product("quaternion", "w", "w", -x * y, "e");
      rec.orthogonal_blocks({{"e0"}, {"e1"}, {"e2"}, {"e3"}, {"e", "u", "v", "w"}});
      rec.equal("identities", "e = (1 - lambda(s^2))/2", half_e, e_expected);
      break;
    }
  }
  return r;
}

/// Orbits of G on the characters of an elementary abelian N, each character
/// given by its sign vector on N.elements.
struct CharacterOrbits {
  std::vector<std::vector<int>> characters;           // sign vectors
  std::vector<std::vector<std::size_t>> orbits;       // indices into characters
  std::vector<std::vector<int>> stabilizers;          // group elements, per orbit representative
};

inline CharacterOrbits character_orbits(const RegularSubgroup& N, const FiniteGroup& G) {
  if (N.type != GroupType::C2xC2xC2) throw InputError("character orbits are computed for elementary abelian N");
  const auto gens = greedy_generators(N.elements);
  CharacterOrbits out;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> chi;
    for (const Perm& n : N.elements) {
      int v = 1;
      // write n in the generators by search over exponent vectors
      for (int e = 0; e < 8; ++e) {
        Perm p = Perm::identity(8);
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (e >> k & 1) p = p * gens[k];
        }
        if (p == n) v = (std::popcount(static_cast<unsigned>(e & mask)) % 2) ? -1 : 1;
      }
      chi.push_back(v);
    }
    out.characters.push_back(std::move(chi));
  }
  // (g chi)(n) = chi(lambda(g)^-1 n lambda(g))
  auto act = [&](int g, const std::vector<int>& chi) {
    const Perm lgi = lambda_of(G, G.inverse(g));
    std::vector<int> img;
    for (const Perm& n : N.elements) img.push_back(chi[N.elements.size() > 0 ? static_cast<std::size_t>(
        std::lower_bound(N.elements.begin(), N.elements.end(), n.conjugated_by(lgi)) - N.elements.begin()) : 0]);
    return img;
  };
  std::vector<bool> seen(8, false);
  for (std::size_t i = 0; i < 8; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g) {
      const auto img = act(g, out.characters[i]);
      const auto j = static_cast<std::size_t>(std::find(out.characters.begin(), out.characters.end(), img) - out.characters.begin());
      if (j == i) stab.push_back(g);
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
    out.stabilizers.push_back(std::move(stab));
  }
  return out;
}

}  // namespace hopfq8
