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


// Wedderburn decomposition of the fixed subalgebras: split the center by
// idempotents, then name each simple block as an etale field (by its Kummer
// group of square classes) or a quaternion algebra (by its ramification).

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hopfq8/fixed_algebra.hpp"

namespace hopfq8 {

struct Block {
  std::string kind;               // "field", "quaternion", "matrix"
  std::vector<std::string> data;  // field: square classes; quaternion: ramified places
  int multiplicity = 1;
  int dim = 1;  // Q-dimension of one copy

  int dimension() const { return dim; }

  auto operator<=>(const Block&) const = default;
};

inline std::string to_string(const Block& b) {
  std::string s;
  if (b.kind == "field") {
    if (b.data.empty()) {
      s = "Q";
    } else if (b.data[0].rfind("poly:", 0) == 0) {
      s = "Q[x]/(" + b.data[0].substr(5) + ")";
    } else {
      s = "Q(sqrt(" + b.data[0] + ")";
      if (b.data.size() > 1) s += ",sqrt(" + b.data[1] + ")";
      s += ")";
    }
  } else if (b.kind == "matrix") {
    s = "M2(Q)";
  } else {
    s = "H{";
    for (std::size_t i = 0; i < b.data.size(); ++i) s += (i ? "," : "") + b.data[i];
    s += "}";
  }
  if (b.multiplicity > 1) s += "^" + std::to_string(b.multiplicity);
  return s;
}

/// Canonical isomorphism descriptor of a semisimple Q-algebra.
struct AlgebraDescriptor {
  std::vector<Block> blocks;
  std::vector<std::string> flags;

  /// Merges equal blocks and sorts by dimension, kind and data.
  void normalize() {
    std::map<std::tuple<int, std::string, std::vector<std::string>>, int> counts;
    for (const auto& b : blocks) counts[{b.dimension(), b.kind, b.data}] += b.multiplicity;
    blocks.clear();
    for (const auto& [k, m] : counts) blocks.push_back({std::get<1>(k), std::get<2>(k), m, std::get<0>(k)});
    std::sort(flags.begin(), flags.end());
    flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
  }

  bool same_algebra(const AlgebraDescriptor& o) const { return blocks == o.blocks; }

  int dimension() const {
    int d = 0;
    for (const auto& b : blocks) d += b.dimension() * b.multiplicity;
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? " x " : "") + hopfq8::to_string(blocks[i]);
    return s;
  }
};

inline void to_json(nlohmann::json& j, const Block& b) {
  j = nlohmann::json{{"kind", b.kind}, {"data", b.data}, {"multiplicity", b.multiplicity}, {"dimension", b.dim}};
}

inline void to_json(nlohmann::json& j, const AlgebraDescriptor& d) {
  j = nlohmann::json{{"blocks", d.blocks}, {"flags", d.flags}};
}

/// Sorted nontrivial elements of the subgroup of Q^x/(Q^x)^2 generated by gens.
inline std::vector<SquareClass> kummer_group(const std::vector<SquareClass>& gens) {
  std::set<SquareClass> group{SquareClass(1)};
  for (const auto& g : gens) {
    std::set<SquareClass> next = group;
    for (const auto& h : group) next.insert(h * g);
    group = std::move(next);
  }
  group.erase(SquareClass(1));
  std::vector<SquareClass> out(group.begin(), group.end());
  std::sort(out.begin(), out.end(), [](const SquareClass& x, const SquareClass& y) { return x.rep() < y.rep(); });
  return out;
}

inline Block field_block(const std::vector<SquareClass>& kummer, int multiplicity = 1) {
  Block b{"field", {}, multiplicity, static_cast<int>(kummer.size()) + 1};
  for (const auto& c : kummer) b.data.push_back(std::to_string(c.rep()));
  return b;
}

/// Q(sqrt c1) (x) ... (x) Q(sqrt ck) as a product of copies of one field.
inline Block tensor_of_quadratics(const std::vector<SquareClass>& classes) {
  const auto group = kummer_group(classes);
  const int total = 1 << classes.size();
  return field_block(group, total / static_cast<int>(group.size() + 1));
}

inline Block quaternion_block(const SquareClass& x, const SquareClass& y) {
  const auto ram = ramification_set(x, y);
  if (ram.empty()) return {"matrix", {}, 1, 4};
  Block b{"quaternion", {}, 1, 4};
  for (Place v : ram) b.data.push_back(place_string(v));
  return b;
}

namespace detail {

/// Kummer group of the number field Q[x]/(f), for f irreducible of degree 1,
/// 2 or biquadratic 4; empty optional for other fields.
inline std::optional<std::vector<SquareClass>> field_kummer_group(const Poly& f_in) {
  const Poly f = f_in.monic();
  if (f.degree() == 1) return std::vector<SquareClass>{};
  if (f.degree() == 2) {
    const Rational disc = f[1] * f[1] - 4 * f[0];
    return kummer_group({SquareClass(disc)});
  }
  if (f.degree() != 4) return std::nullopt;
  const Rational c3 = f[3], c2 = f[2], c1 = f[1], c0 = f[0];
  // roots theta = r1 r2 + r3 r4 and its conjugates
  const Poly resolvent(Vec{-(c3 * c3 * c0 - 4 * c2 * c0 + c1 * c1), c3 * c1 - 4 * c0, -c2, Rational(1)});
  if (!is_squarefree(resolvent)) return std::nullopt;
  const auto factors = factor_squarefree(resolvent);
  if (factors.size() != 3) return std::nullopt;
  std::vector<SquareClass> classes;
  for (const auto& lin : factors) {
    const Rational theta = -lin[0];
    // r1 + r2 and r3 + r4 are the roots of y^2 + c3 y + (c2 - theta)
    const Rational d1 = c3 * c3 - 4 * (c2 - theta);
    // r1 r2 and r3 r4 are the roots of y^2 - theta y + c0
    const Rational d2 = theta * theta - 4 * c0;
    for (const Rational& d : {d1, d2}) {
      if (d != 0 && !is_rational_square(d)) {
        classes.push_back(SquareClass(d));
        break;
      }
    }
  }
  auto group = kummer_group(classes);
  if (group.size() != 3) return std::nullopt;
  return group;
}

}  // namespace detail

/// Quaternion parameters (x, y) of a central simple block of dimension 4 with
/// identity e, found from a pure element and its anticommutant.
struct QuaternionBasis {
  Vec u, v;
  Rational x, y;
};

inline QuaternionBasis quaternion_basis(const StructureAlgebra& A, const Subspace& block, const Vec& e) {
  const std::size_t n = A.dim();
  const Mat& bb = block.basis();
  // reduced trace is half the trace of left multiplication on the block
  Vec trace(bb.size());
  for (std::size_t k = 0; k < bb.size(); ++k) {
    Rational tr = 0;
    for (std::size_t l = 0; l < bb.size(); ++l) tr += (*block.coords(A.mul(bb[k], bb[l])))[l];
    trace[k] = tr;
  }
  Mat pure;
  for (const auto& c : kernel({trace}, bb.size())) {
    Vec v = zero_vec(n);
    for (std::size_t k = 0; k < bb.size(); ++k) v = v + c[k] * bb[k];
    pure.push_back(std::move(v));
  }
  auto scalar_square = [&](const Vec& q) -> std::optional<Rational> {
    const Vec sq = A.mul(q, q);
    auto c = coordinates(Mat{e}, sq);
    if (!c) throw VerificationError("pure element with non-scalar square");
    if ((*c)[0] == 0) return std::nullopt;
    return (*c)[0];
  };
  auto combos = [](const Mat& base) {
    Mat out = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        out.push_back(base[i] + base[j]);
        out.push_back(base[i] - base[j]);
      }
    }
    if (base.size() == 3) out.push_back(base[0] + base[1] + base[2]);
    return out;
  };
  for (const Vec& u : combos(pure)) {
    const auto x = scalar_square(u);
    if (!x) continue;
    // v pure with uv + vu = 0
    Mat rows(n, zero_vec(pure.size()));
    for (std::size_t k = 0; k < pure.size(); ++k) {
      const Vec ac = A.mul(u, pure[k]) + A.mul(pure[k], u);
      for (std::size_t i = 0; i < n; ++i) rows[i][k] = ac[i];
    }
    Mat anti;
    for (const auto& c : kernel(rows, pure.size())) {
      Vec v = zero_vec(n);
      for (std::size_t k = 0; k < pure.size(); ++k) v = v + c[k] * pure[k];
      anti.push_back(std::move(v));
    }
    for (const Vec& v : combos(anti)) {
      const auto y = scalar_square(v);
      if (!y) continue;
      const Vec w = A.mul(u, v);
      if (rank({e, u, v, w}, n) != 4 || A.mul(v, u) != Rational(-1) * w) continue;
      return {u, v, *x, *y};
    }
  }
  throw VerificationError("no quaternion basis found in a 4-dimensional simple block");
}

struct Decomposition {
  AlgebraDescriptor descriptor;
  std::size_t center_dim = 0;
  Poly center_min_poly;
  std::vector<Poly> factors;
  std::vector<std::pair<Rational, Rational>> quaternion_parameters;
};

/// Wedderburn decomposition of a semisimple algebra over Q whose simple
/// blocks are fields or 4-dimensional central simple algebras.
inline Decomposition decompose(const StructureAlgebra& A) {
  Decomposition out;
  const Mat Z = A.center();
  out.center_dim = Z.size();
  // a generic combination of the center basis generates the center
  std::optional<Vec> primitive;
  for (int k = 1; k <= 64 && !primitive; ++k) {
    Vec c = zero_vec(A.dim());
    for (std::size_t i = 0; i < Z.size(); ++i) c = c + Rational(static_cast<long long>(1 + (i + 1) * k + i * i)) * Z[i];
    const Poly mu = A.min_poly(c);
    if (static_cast<std::size_t>(mu.degree()) == Z.size()) {
      primitive = c;
      out.center_min_poly = mu;
    }
  }
  if (!primitive) throw VerificationError("no primitive element found for the center");
  if (!is_squarefree(out.center_min_poly)) throw VerificationError("center is not semisimple");
  out.factors = factor_squarefree(out.center_min_poly);
  Vec total = zero_vec(A.dim());
  for (const Poly& f : out.factors) {
    const Poly g = divmod(out.center_min_poly, f).quotient;
    const Poly idem = (inverse_mod(g, f) * g) % out.center_min_poly;
    const Vec e = A.eval(idem, *primitive);
    if (A.mul(e, e) != e) throw VerificationError("central idempotent check failed");
    total = total + e;
    Mat span;
    for (std::size_t j = 0; j < A.dim(); ++j) span.push_back(A.mul(e, unit_vec(A.dim(), j)));
    const Subspace block(span, A.dim());
    const int deg = f.degree();
    const auto dim = static_cast<int>(block.dim());
    if (dim == deg) {
      auto kummer = detail::field_kummer_group(f);
      if (!kummer) {
        out.descriptor.blocks.push_back({"field", {"poly:" + f.to_string()}, 1, deg});
        out.descriptor.flags.push_back("unrecognized_field");
      } else {
        out.descriptor.blocks.push_back(field_block(*kummer));
      }
    } else if (deg == 1 && dim == 4) {
      const auto q = quaternion_basis(A, block, e);
      out.quaternion_parameters.push_back({q.x, q.y});
      out.descriptor.blocks.push_back(quaternion_block(SquareClass(q.x), SquareClass(q.y)));
    } else {
      throw VerificationError("unsupported simple block: center degree " + std::to_string(deg) + ", dimension " +
                              std::to_string(dim));
    }
  }
  if (total != A.unit()) throw VerificationError("central idempotents do not sum to one");
  out.descriptor.normalize();
  if (out.descriptor.dimension() != static_cast<int>(A.dim())) throw VerificationError("block dimensions do not add up");
  return out;
}

/// The decomposition predicted for each family from its explicit basis.
inline AlgebraDescriptor template_descriptor(const StructureName& name, const BiquadraticModel& K) {
  name.validate();
  AlgebraDescriptor d;
  const SquareClass a(K.a), b(K.b);
  auto rational_copies = [&](int m) { d.blocks.push_back(field_block({}, m)); };
  switch (name.family) {
    case Family::E:
      rational_copies(4);
      d.blocks.push_back(tensor_of_quadratics({a, b}));
      break;
    case Family::A:
      rational_copies(4);
      d.blocks.push_back(tensor_of_quadratics({SquareClass(K.square(fixed_mask(*name.s))), SquareClass(-1)}));
      break;
    case Family::C: {
      const SquareClass minus_bt(-K.square(fixed_mask(*name.t)));
      rational_copies(2);
      d.blocks.push_back(tensor_of_quadratics({minus_bt}));
      d.blocks.push_back(tensor_of_quadratics({SquareClass(-2), minus_bt}));
      break;
    }
    default: {
      const auto q = quaternion_parameters(name, K);
      rational_copies(4);
      d.blocks.push_back(quaternion_block(SquareClass(q.x), SquareClass(q.y)));
      break;
    }
  }
  d.normalize();
  return d;
}

struct WedderburnReport {
  StructureName name;
  Rational a, b;
  Decomposition computed;
  AlgebraDescriptor predicted;

  bool matches_template() const { return computed.descriptor.same_algebra(predicted); }
};

/// Decomposes the fixed subalgebra of K[N] for the named structure and
/// compares it with the family template.
inline WedderburnReport wedderburn(const StructureName& name, const FiniteGroup& G, const BiquadraticModel& K) {
  const RegularSubgroup N = build(name, G);
  const KGroupAlgebra KN(G, N, K);
  WedderburnReport r;
  r.name = name.canonical();
  r.a = K.a;
  r.b = K.b;
  r.computed = decompose(KN.fixed_algebra());
  r.predicted = template_descriptor(name, K);
  if (!witt_embeddable(SquareClass(K.a), SquareClass(K.b))) r.computed.descriptor.flags.push_back("no_quaternionic_extension");
  if (!r.matches_template()) r.computed.descriptor.flags.push_back("template_mismatch");
  r.computed.descriptor.normalize();
  return r;
}

inline nlohmann::json to_json(const WedderburnReport& r) {
  nlohmann::json j = r.computed.descriptor;
  j["structure"] = r.name.to_string();
  j["a"] = hopfq8::to_string(r.a);
  j["b"] = hopfq8::to_string(r.b);
  j["description"] = r.computed.descriptor.to_string();
  j["template"] = r.predicted.to_string();
  j["center_dimension"] = r.computed.center_dim;
  return j;
}

/// Named structures grouped by the isomorphism class of their fixed algebra,
/// in order of first appearance.
struct FAlgebraClass {
  AlgebraDescriptor descriptor;
  std::vector<StructureName> members;
};

struct FAlgebraClasses {
  std::vector<FAlgebraClass> classes;
  std::vector<WedderburnReport> reports;
};

inline FAlgebraClasses f_algebra_classes(const FiniteGroup& G, const BiquadraticModel& K) {
  FAlgebraClasses out;
  for (const auto& name : all_names()) {
    out.reports.push_back(wedderburn(name, G, K));
    const auto& d = out.reports.back().computed.descriptor;
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const FAlgebraClass& c) { return c.descriptor.same_algebra(d); });
    if (it == out.classes.end()) {
      out.classes.push_back({d, {name}});
    } else {
      it->members.push_back(name);
    }
  }
  return out;
}

}  // namespace hopfq8
