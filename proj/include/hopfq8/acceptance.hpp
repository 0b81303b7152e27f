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


// The acceptance suite: one pass/fail result per criterion, shared by the
// verify-all subcommand and the standalone acceptance runner.

#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfq8/enumerate.hpp"
#include "hopfq8/equivariance.hpp"
#include "hopfq8/oracles.hpp"
#include "hopfq8/wedderburn.hpp"

namespace hopfq8 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::vector<std::pair<Rational, Rational>> field_pairs{{11, 2}, {11, 6}};
  std::int64_t hilbert_bound = 50;
  std::int64_t embedding_bound = 60;
  std::uint64_t budget = kDefaultSearchBudget;
};

namespace acceptance {

/// Collects failures; a criterion passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed:";
    for (const auto& f : failures_) s += " [" + f + "]";
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline std::string pair_string(const std::pair<Rational, Rational>& p) {
  return "(" + to_string(p.first) + "," + to_string(p.second) + ")";
}

inline const FiniteGroup& q8() {
  static const FiniteGroup g = q8_preset();
  return g;
}

inline CriterionResult table_reproduction(const AcceptanceOptions& opt) {
  EnumerationOptions eo;
  eo.budget = opt.budget;
  const auto start = std::chrono::steady_clock::now();
  const auto res = enumerate_regular_normalized(q8(), eo);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Checker c;
  const auto h = type_histogram(res.subgroups);
  c.expect(res.subgroups.size() == 22, "22 subgroups");
  c.expect(h.at(GroupType::C2xC2xC2) == 2 && h.at(GroupType::C4xC2) == 6 && h.at(GroupType::C8) == 6 &&
               h.at(GroupType::Q8) == 2 && h.at(GroupType::D4) == 6,
           "type histogram");
  c.expect(secs < 60, "runtime under 60 s");
  return {1, "Table 1 reproduction", c.ok(), c.summary(summary_line(res.subgroups)), 0};
}

inline CriterionResult named_completeness(const AcceptanceOptions& opt) {
  Checker c;
  std::set<std::vector<Perm>> named;
  for (const auto& N : all_named(q8())) named.insert(N.elements);
  std::vector<std::set<std::vector<Perm>>> found;
  for (Strategy s : {Strategy::OrbitDfs, Strategy::PairClosure}) {
    EnumerationOptions eo;
    eo.strategy = s;
    eo.budget = opt.budget;
    std::set<std::vector<Perm>> got;
    for (const auto& N : enumerate_regular_normalized(q8(), eo).subgroups) got.insert(N.elements);
    c.expect(got == named, to_string(s) + " equals the named set");
    found.push_back(std::move(got));
  }
  c.expect(found[0] == found[1], "strategies agree");
  return {2, "Named-structure completeness", c.ok(), c.summary("both strategies return exactly the 22 named subgroups"), 0};
}

inline CriterionResult remark_check(const AcceptanceOptions&) {
  Checker c;
  const Perm r = rho_of(q8(), q8().mul(element_of(q8(), Symbol::Sigma), element_of(q8(), Symbol::Sigma)));
  for (const auto& N : all_named(q8())) c.expect(N.contains(r), *N.name);
  return {3, "rho(sigma^2) in every structure", c.ok(), c.summary("rho(sigma^2) lies in all 22 subgroups"), 0};
}

/// Expected (orbit size, stabilizer) multiset for each family.
inline std::multiset<std::pair<std::size_t, std::vector<int>>> expected_orbits(const StructureName& n) {
  const auto& G = q8();
  auto cyc = [&](Symbol x) { return G.cyclic_subgroup(element_of(G, x)); };
  std::vector<int> all(8);
  std::iota(all.begin(), all.end(), 0);
  std::multiset<std::pair<std::size_t, std::vector<int>>> m;
  auto singletons = [&](int k) {
    for (int i = 0; i < k; ++i) m.insert({1, all});
  };
  switch (n.family) {
    case Family::E:
    case Family::Q8Lambda:
    case Family::DLambda:
      singletons(2);
      for (Symbol x : kSymbols) m.insert({2, cyc(x)});
      break;
    case Family::A:
      singletons(4);
      m.insert({2, cyc(*n.s)});
      m.insert({2, cyc(*n.s)});
      break;
    case Family::C:
      singletons(2);
      for (int i = 0; i < 3; ++i) m.insert({2, cyc(*n.t)});
      break;
    case Family::Q8Rho: singletons(8); break;
    case Family::DRho:
      singletons(4);
      m.insert({2, cyc(*n.s)});
      m.insert({2, cyc(*n.s)});
      break;
  }
  return m;
}

inline CriterionResult orbit_data(const AcceptanceOptions&) {
  Checker c;
  for (const auto& N : all_named(q8())) {
    const auto d = orbit_decomposition(N, q8());
    std::multiset<std::pair<std::size_t, std::vector<int>>> got;
    for (std::size_t i = 0; i < d.count(); ++i) got.insert({d.orbits[i].size(), d.stabilizers[i]});
    c.expect(got == expected_orbits(StructureName::parse(*N.name)), *N.name);
  }
  return {4, "Orbit data", c.ok(), c.summary("orbit sizes and stabilizers match for all 22"), 0};
}

inline CriterionResult hopf_partition(const AcceptanceOptions&) {
  Checker c;
  const auto all = all_named(q8());
  const auto hc = hopf_iso_classes(all, q8());
  c.expect(hc.is_equivalence, "relation is an equivalence");
  c.expect(hc.classes.size() == 15, "15 classes");
  auto same = [&](const StructureName& x, const StructureName& y) {
    for (const auto& cls : hc.classes) {
      const bool hx = std::find(cls.begin(), cls.end(), x.to_string()) != cls.end();
      const bool hy = std::find(cls.begin(), cls.end(), y.to_string()) != cls.end();
      if (hx || hy) return hx && hy;
    }
    return false;
  };
  for (const auto& x : all_names()) {
    for (const auto& y : all_names()) {
      bool expected = x == y;
      if (x.family == y.family) {
        if (x.family == Family::E) expected = true;
        if (x.family == Family::A) expected = x.s == y.s;
        if (x.family == Family::C) expected = x.t == y.t;
      }
      c.expect(same(x, y) == expected, x.to_string() + " vs " + y.to_string());
    }
  }
  int certified = 0;
  for (const auto& m : explicit_maps(q8())) {
    const bool ok = realize(m, q8()).has_value();
    certified += ok;
    c.expect(ok, m.description + " from " + m.source.to_string());
  }
  return {5, "Hopf-isomorphism partition", c.ok(),
          c.summary("15 classes; " + std::to_string(certified) + " explicit maps certified"), 0};
}

inline CriterionResult fixed_dimensions(const AcceptanceOptions& opt) {
  Checker c;
  for (const auto& p : opt.field_pairs) {
    const BiquadraticModel K(p.first, p.second);
    for (const auto& name : all_names()) {
      const KGroupAlgebra A(q8(), build(name, q8()), K);
      c.expect(A.fixed_basis().size() == 8, name.to_string() + " at " + pair_string(p));
    }
  }
  return {6, "Fixed-algebra dimensions", c.ok(), c.summary("dimension 8 for all 22 structures at every pair"), 0};
}

inline CriterionResult tables(const AcceptanceOptions& opt) {
  Checker c;
  std::size_t entries = 0;
  for (const auto& p : opt.field_pairs) {
    const BiquadraticModel K(p.first, p.second);
    for (const auto& name : all_names()) {
      const auto r = verify_table(name, q8(), K);
      const std::string where = name.to_string() + " at " + pair_string(p);
      c.expect(r.ok(), where);
      for (const auto& chk : r.checks) c.expect(chk.ok, where + ": " + chk.relation);
      entries += r.checks.size();
      switch (name.family) {
        case Family::A: c.expect(r.count("table") == 16, where + " has 16 table entries"); break;
        case Family::C:
          c.expect(r.count("table.2") == 4 && r.count("table.3") == 16, where + " has 4 + 16 table entries");
          break;
        case Family::E: break;
        default: c.expect(r.count("quaternion") > 0, where + " has quaternion relations"); break;
      }
    }
  }
  return {7, "Multiplication tables", c.ok(),
          c.summary(std::to_string(entries) + " relations checked exactly, zero mismatches"), 0};
}

inline CriterionResult decompositions(const AcceptanceOptions& opt) {
  Checker c;
  std::string note;
  for (const auto& p : opt.field_pairs) {
    const BiquadraticModel K(p.first, p.second);
    const std::string at = " at " + pair_string(p);
    if (!witt_embeddable(SquareClass(K.a), SquareClass(K.b))) {
      c.expect(false, "gate: no quaternionic extension" + at);
      continue;
    }
    const auto fc = f_algebra_classes(q8(), K);
    auto desc = [&](const std::string& n) {
      for (const auto& r : fc.reports) {
        if (r.name.to_string() == n) return r.computed.descriptor;
      }
      throw VerificationError("missing report for " + n);
    };
    for (const auto& r : fc.reports) c.expect(r.matches_template(), r.name.to_string() + " template" + at);
    AlgebraDescriptor e;
    e.blocks = {field_block({}, 4), tensor_of_quadratics({SquareClass(K.a), SquareClass(K.b)})};
    e.normalize();
    c.expect(desc("E[s=sigma,t=tau]").same_algebra(e), "E-type" + at);
    AlgebraDescriptor h;
    h.blocks = {field_block({}, 4), quaternion_block(SquareClass(-1), SquareClass(-1))};
    h.normalize();
    c.expect(desc("Q8_rho").same_algebra(h) && desc("Q8_lambda").same_algebra(h), "Q8-types" + at);
    std::set<std::string> d_classes;
    for (Symbol s : kSymbols) {
      AlgebraDescriptor d;
      d.blocks = {field_block({}, 4), quaternion_block(SquareClass(-1), SquareClass(K.square(fixed_mask(s))))};
      d.normalize();
      for (Family f : {Family::DLambda, Family::DRho}) {
        const auto n = StructureName{f, s, std::nullopt}.to_string();
        c.expect(desc(n).same_algebra(d), n + at);
        d_classes.insert(desc(n).to_string());
      }
    }
    if (p == std::pair<Rational, Rational>{11, 2}) {
      c.expect(e.to_string() == "Q^4 x Q(sqrt(2),sqrt(11))", "E-type literal at (11,2)");
      c.expect(desc("D_rho[s=tau]").to_string() == "Q^4 x M2(Q)", "b-parameter D splits at (11,2)");
      c.expect(desc("D_rho[s=sigma]").same_algebra(desc("D_rho[s=sigmatau]")) &&
                   desc("D_rho[s=sigma]").to_string() != "Q^4 x M2(Q)",
               "a- and ab-parameter D share a division class at (11,2)");
      c.expect(d_classes.size() == 2, "two D-classes at (11,2)");
      c.expect(fc.classes.size() == 10, "10 algebra classes at (11,2)");
    }
    if (p == std::pair<Rational, Rational>{11, 6}) c.expect(d_classes.size() == 3, "three D-classes at (11,6)");
    note += (note.empty() ? "" : "; ") + pair_string(p) + ": " + std::to_string(fc.classes.size()) + " classes, " +
            std::to_string(d_classes.size()) + " D-classes";
  }
  return {8, "Decomposition instances", c.ok(), c.summary(note), 0};
}

inline CriterionResult hilbert_oracle(const AcceptanceOptions& opt) {
  Checker c;
  oracle::CachedHilbert brute;
  std::size_t compared = 0;
  const std::int64_t B = opt.hilbert_bound;
  for (std::int64_t x = -B; x <= B; ++x) {
    for (std::int64_t y = -B; y <= B; ++y) {
      if (x == 0 || y == 0) continue;
      int product = 1;
      for (Place v : oracle::relevant_places(x, y)) {
        const int h = hilbert_symbol(x, y, v);
        product *= h;
        c.expect(h == brute(x, y, v), "(" + std::to_string(x) + "," + std::to_string(y) + ")_" + place_string(v));
        ++compared;
      }
      c.expect(product == 1, "product formula at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  return {9, "Hilbert-symbol oracle", c.ok(),
          c.summary(std::to_string(compared) + " symbols equal the brute-force search; product formula holds"), 0};
}

inline CriterionResult embeddability(const AcceptanceOptions& opt) {
  Checker c;
  c.expect(witt_embeddable(SquareClass(11), SquareClass(2)), "(11,2) embeddable");
  c.expect(witt_embeddable(SquareClass(11), SquareClass(6)), "(11,6) embeddable");
  c.expect(!witt_embeddable(SquareClass(-1), SquareClass(5)), "(-1,5) not embeddable");
  const std::vector<Place> two_inf{2, kInfinity};
  std::size_t pairs = 0;
  std::set<std::pair<std::int64_t, std::int64_t>> classes;
  for (std::int64_t a = 1; a <= opt.embedding_bound; ++a) {
    for (std::int64_t b = 1; b <= opt.embedding_bound; ++b) {
      const SquareClass A(a), Bc(b);
      if (A.is_trivial() || Bc.is_trivial() || (A * Bc).is_trivial()) continue;
      if (!witt_embeddable(A, Bc)) continue;
      ++pairs;
      c.expect(ramification_set(-a, -b) == two_inf, "ram(-a,-b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      c.expect(ramification_set(-a, b) == ramification_set(-1, a), "ram(-a,b) = ram(-1,a) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      classes.insert({A.rep(), Bc.rep()});
    }
  }
  // the fixed algebras of lambda(G) and rho(G) agree for every embeddable class pair
  const auto rho_desc = decompose(KGroupAlgebra(q8(), build(StructureName::parse("Q8_rho"), q8()), BiquadraticModel(11, 2)).fixed_algebra()).descriptor;
  const auto lam = build(StructureName::parse("Q8_lambda"), q8());
  for (const auto& [a, b] : classes) {
    const auto d = decompose(KGroupAlgebra(q8(), lam, BiquadraticModel(a, b)).fixed_algebra()).descriptor;
    c.expect(d.same_algebra(rho_desc), "lambda(G) vs rho(G) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return {10, "Embeddability", c.ok(),
          c.summary(std::to_string(pairs) + " embeddable pairs; " + std::to_string(classes.size()) +
                    " class pairs with lambda(G) and rho(G) algebras equal"),
          0};
}

}  // namespace acceptance

inline std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> acceptance_criteria() {
  using namespace acceptance;
  return {table_reproduction, named_completeness, remark_check, orbit_data,    hopf_partition,
          fixed_dimensions,   tables,             decompositions, hilbert_oracle, embeddability};
}

/// Runs one criterion, turning exceptions into failures.
inline CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  const auto all = acceptance_criteria();
  if (id < 1 || id > static_cast<int>(all.size())) throw InputError("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = all[static_cast<std::size_t>(id - 1)](opt);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << ": " << r.detail;
  return os.str();
}

}  // namespace hopfq8
