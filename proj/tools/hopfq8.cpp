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


// hopfq8 command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 input error (including a failed
// embeddability gate and exhausted search budgets), 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hopfq8/hopfq8.hpp"

namespace {

using namespace hopfq8;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

FiniteGroup load_group(const std::string& source) {
  if (source == "q8" || source == "Q8") return q8_preset();
  return load_group_file(source);
}

Rational parse_rational(const std::string& s, const std::string& what) {
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw InputError(what + " is not a rational number: " + s);
  }
}

/// --json with no value prints to stdout instead of the text report; with a
/// path it writes the file in addition to the text report.
struct JsonSink {
  std::vector<CLI::Option*> opts;  // one per subcommand, sharing the path
  std::optional<std::string> path;

  bool requested() const {
    return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }
  bool to_stdout() const { return requested() && (!path || path->empty()); }

  void emit(const json& j) const {
    if (!requested()) return;
    const std::string text = j.dump(2) + "\n";
    if (to_stdout()) {
      std::cout << text;
      return;
    }
    std::ofstream out(*path);
    if (!out) throw InputError("cannot write " + *path);
    out << text;
  }
};

void add_json(CLI::App* cmd, JsonSink& sink, const std::string& help) {
  sink.opts.push_back(cmd->add_option("--json", sink.path, help)->expected(0, 1));
}

std::string names_of(const FiniteGroup& G, const std::vector<int>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + G.name(elems[i]);
  return s + "}";
}

int cmd_enumerate(const std::string& group, const std::string& strategy, bool list, const JsonSink& sink) {
  const FiniteGroup G = load_group(group);
  EnumerationOptions opt;
  opt.strategy = strategy_from_string(strategy);
  opt.budget = search_budget_from_env();
  const auto res = enumerate_regular_normalized(G, opt);
  json arr = json::array();
  for (const auto& N : res.subgroups) {
    json e;
    e["canonical_elements"] = N.elements;
    e["type"] = N.type ? json(std::string(to_string(*N.type))) : json(nullptr);
    e["matched_name"] = N.name ? json(*N.name) : json(nullptr);
    arr.push_back(std::move(e));
  }
  if (!sink.to_stdout()) {
    std::cout << summary_line(res.subgroups) << "\n";
    if (list) {
      for (const auto& N : res.subgroups) {
        std::cout << "  " << (N.type ? std::string(short_label(*N.type)) : std::string("?")) << "  "
                  << N.name.value_or("-") << "  generators";
        for (const auto& g : N.generators) std::cout << " " << g.cycle_string();
        std::cout << "\n";
      }
    }
  }
  sink.emit(arr);
  return 0;
}

int cmd_orbits(const std::string& group, const std::string& name_str, const JsonSink& sink) {
  const FiniteGroup G = load_group(group);
  const auto name = StructureName::parse(name_str);
  const auto N = build(name, G);
  const auto d = orbit_decomposition(N, G);
  json j;
  j["structure"] = name.to_string();
  j["orbits"] = json::array();
  for (std::size_t i = 0; i < d.count(); ++i) {
    json o;
    o["elements"] = json::array();
    for (const auto& p : d.orbits[i]) o["elements"].push_back(p.cycle_string());
    o["stabilizer"] = json::array();
    for (int g : d.stabilizers[i]) o["stabilizer"].push_back(G.name(g));
    j["orbits"].push_back(std::move(o));
  }
  if (!sink.to_stdout()) {
    std::cout << name.to_string() << ": " << d.count() << " orbits, " << d.nontrivial_count() << " nontrivial\n";
    for (std::size_t i = 0; i < d.count(); ++i) {
      std::cout << "  {";
      for (std::size_t k = 0; k < d.orbits[i].size(); ++k) std::cout << (k ? ", " : "") << d.orbits[i][k].cycle_string();
      std::cout << "}  stabilizer " << names_of(G, d.stabilizers[i]) << "\n";
    }
  }
  sink.emit(j);
  return 0;
}

int cmd_hopf_classes(const std::string& group, const JsonSink& sink) {
  const FiniteGroup G = load_group(group);
  const auto hc = hopf_iso_classes(all_named(G), G);
  if (!hc.is_equivalence) throw VerificationError("equivariant isomorphism relation is not an equivalence");
  json j;
  j["classes"] = hc.classes;
  j["witnesses"] = json::array();
  for (const auto& [src, dst, f] : hc.witnesses) {
    json m = json::object();
    for (std::size_t i = 0; i < f.domain.size(); ++i) m[f.domain[i].cycle_string()] = f.image[i].cycle_string();
    j["witnesses"].push_back({{"source", src}, {"target", dst}, {"map", m}});
  }
  if (!sink.to_stdout()) {
    std::cout << hc.classes.size() << " classes\n";
    for (const auto& cls : hc.classes) {
      std::cout << "  [";
      for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? ", " : "") << cls[i];
      std::cout << "]\n";
    }
  }
  sink.emit(j);
  return 0;
}

BiquadraticModel field_from(const std::string& a, const std::string& b) {
  return BiquadraticModel(parse_rational(a, "a"), parse_rational(b, "b"));
}

std::string flags_string(const std::vector<std::string>& flags) {
  if (flags.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < flags.size(); ++i) s += (i ? ", " : "") + flags[i];
  return s;
}

int cmd_wedderburn(const std::string& group, const std::string& name_str, const std::string& a, const std::string& b,
                   const JsonSink& sink) {
  const FiniteGroup G = load_group(group);
  const auto K = field_from(a, b);
  const auto r = wedderburn(StructureName::parse(name_str), G, K);
  if (!sink.to_stdout()) {
    std::cout << r.name.to_string() << " at (" << to_string(K.a) << "," << to_string(K.b)
              << "): " << r.computed.descriptor.to_string() << "\n";
    std::cout << "  template: " << r.predicted.to_string() << (r.matches_template() ? " (match)" : " (MISMATCH)") << "\n";
    std::cout << "  flags: " << flags_string(r.computed.descriptor.flags) << "\n";
  }
  sink.emit(to_json(r));
  return r.matches_template() ? 0 : kExitVerification;
}

int cmd_falg_classes(const std::string& group, const std::string& a, const std::string& b, const JsonSink& sink) {
  const FiniteGroup G = load_group(group);
  const auto K = field_from(a, b);
  const auto fc = f_algebra_classes(G, K);
  bool all_match = true;
  json j;
  j["a"] = to_string(K.a);
  j["b"] = to_string(K.b);
  j["classes"] = json::array();
  for (const auto& c : fc.classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(m.to_string());
    j["classes"].push_back({{"descriptor", c.descriptor}, {"description", c.descriptor.to_string()}, {"members", members}});
  }
  for (const auto& r : fc.reports) all_match = all_match && r.matches_template();
  if (!sink.to_stdout()) {
    std::cout << fc.classes.size() << " classes at (" << to_string(K.a) << "," << to_string(K.b) << ")\n";
    for (const auto& c : fc.classes) {
      std::cout << "  " << c.descriptor.to_string() << ":";
      for (const auto& m : c.members) std::cout << " " << m.to_string();
      std::cout << "\n";
    }
    if (!fc.classes.empty()) std::cout << "  flags: " << flags_string(fc.classes.front().descriptor.flags) << "\n";
  }
  sink.emit(j);
  return all_match ? 0 : kExitVerification;
}

int cmd_quat(const std::string& x_str, const std::string& y_str, const JsonSink& sink) {
  const Rational x = parse_rational(x_str, "x"), y = parse_rational(y_str, "y");
  if (x == 0 || y == 0) throw InputError("quaternion parameters must be nonzero");
  const QuaternionClass q{SquareClass(x), SquareClass(y)};
  const auto ram = q.ramified();
  const bool split = ram.empty();
  if (!sink.to_stdout()) {
    std::cout << (split ? "split (M2(Q))" : "division") << ", ramification " << places_string(ram) << "\n";
  }
  json places = json::array();
  for (Place v : ram) places.push_back(place_string(v));
  sink.emit({{"x", to_string(x)}, {"y", to_string(y)}, {"split", split}, {"ramification", places}});
  return 0;
}

int cmd_embeddable(const std::string& a_str, const std::string& b_str, const JsonSink& sink) {
  const SquareClass a(parse_rational(a_str, "a")), b(parse_rational(b_str, "b"));
  const auto c = embeddability_breakdown(a, b);
  const TernaryForm f({a.rep(), b.rep(), (a * b).rep()}), one({1, 1, 1});
  if (!sink.to_stdout()) {
    std::cout << "embeddable: " << (c.equivalent() ? "true" : "false") << "\n";
    std::cout << "  form " << f.to_string() << " against <1,1,1>\n";
    std::cout << "  discriminant: " << f.discriminant().rep() << " vs 1 " << (c.discriminant ? "(equal)" : "(differ)") << "\n";
    const auto s1 = f.signature();
    std::cout << "  signature: (" << s1.first << "," << s1.second << ") vs (3,0) " << (c.signature ? "(equal)" : "(differ)")
              << "\n";
    for (const auto& [v, h] : c.hasse) {
      std::cout << "  hasse at " << place_string(v) << ": " << h.first << " vs " << h.second
                << (h.first == h.second ? " (equal)" : " (differ)") << "\n";
    }
  }
  json hasse = json::array();
  for (const auto& [v, h] : c.hasse) hasse.push_back({{"place", place_string(v)}, {"form", h.first}, {"sum_of_squares", h.second}});
  sink.emit({{"a", a.rep()},
             {"b", b.rep()},
             {"embeddable", c.equivalent()},
             {"discriminant_equal", c.discriminant},
             {"signature_equal", c.signature},
             {"hasse", hasse}});
  return 0;
}

int cmd_verify_all(const std::string& a_str, const std::string& b_str, const JsonSink& sink) {
  const BiquadraticModel K = field_from(a_str, b_str);
  if (!witt_embeddable(SquareClass(K.a), SquareClass(K.b))) {
    throw InputError("gate failure: <a,b,ab> is not equivalent to <1,1,1>, so no quaternionic extension exists");
  }
  AcceptanceOptions opt;
  opt.budget = search_budget_from_env();
  opt.field_pairs = {{K.a, K.b}};
  if (!(K.a == 11 && K.b == 6)) opt.field_pairs.push_back({11, 6});
  json arr = json::array();
  int failed = 0;
  for (int id = 1; id <= static_cast<int>(acceptance_criteria().size()); ++id) {
    const auto r = run_criterion(id, opt);
    failed += !r.pass;
    if (!sink.to_stdout()) std::cout << format_line(r) << std::endl;
    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (!sink.to_stdout()) {
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  }
  sink.emit(arr);
  return failed == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structures on quaternion extensions of degree 8"};
  app.require_subcommand(1);

  std::string group = "q8", strategy = "orbit-dfs", name, a = "11", b = "2", x, y;
  bool list = false;
  JsonSink sink;

  auto* en = app.add_subcommand("enumerate", "Enumerate regular subgroups normalized by lambda(G)");
  en->add_option("--group", group, "q8 or a group JSON file")->capture_default_str();
  en->add_option("--strategy", strategy, "orbit-dfs or pair-closure")->capture_default_str();
  en->add_flag("--list", list, "List every subgroup");
  add_json(en, sink, "Write JSON (to a file, or stdout without a value)");

  auto* orb = app.add_subcommand("orbits", "Orbits of G acting on a named structure");
  orb->add_option("--name", name, "Structure name, e.g. A[s=sigma,t=tau]")->required();
  orb->add_option("--group", group, "q8 or a group JSON file")->capture_default_str();
  add_json(orb, sink, "Write JSON");

  auto* hc = app.add_subcommand("hopf-classes", "Partition the 22 structures into Hopf-isomorphism classes");
  hc->add_option("--group", group, "q8 or a group JSON file")->capture_default_str();
  add_json(hc, sink, "Write JSON");

  auto* wd = app.add_subcommand("wedderburn", "Wedderburn decomposition of the fixed algebra");
  wd->add_option("--name", name, "Structure name")->required();
  wd->add_option("-a", a, "alpha^2")->capture_default_str();
  wd->add_option("-b", b, "beta^2")->capture_default_str();
  wd->add_option("--group", group, "q8 or a group JSON file")->capture_default_str();
  add_json(wd, sink, "Write JSON");

  auto* fa = app.add_subcommand("falg-classes", "Group the 22 structures by fixed-algebra isomorphism class");
  fa->add_option("-a", a, "alpha^2")->capture_default_str();
  fa->add_option("-b", b, "beta^2")->capture_default_str();
  fa->add_option("--group", group, "q8 or a group JSON file")->capture_default_str();
  add_json(fa, sink, "Write JSON");

  auto* qt = app.add_subcommand("quat", "Ramification of the quaternion algebra (x,y) over Q");
  qt->add_option("-x", x, "first parameter")->required();
  qt->add_option("-y", y, "second parameter")->required();
  add_json(qt, sink, "Write JSON");

  auto* em = app.add_subcommand("embeddable", "Whether Q(sqrt a, sqrt b) embeds in a quaternion extension");
  em->add_option("-a", a, "a")->required();
  em->add_option("-b", b, "b")->required();
  add_json(em, sink, "Write JSON");

  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite at (a,b) and (11,6)");
  va->add_option("-a", a, "a")->capture_default_str();
  va->add_option("-b", b, "b")->capture_default_str();
  add_json(va, sink, "Write JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(group, strategy, list, sink);
    if (orb->parsed()) return cmd_orbits(group, name, sink);
    if (hc->parsed()) return cmd_hopf_classes(group, sink);
    if (wd->parsed()) return cmd_wedderburn(group, name, a, b, sink);
    if (fa->parsed()) return cmd_falg_classes(group, a, b, sink);
    if (qt->parsed()) return cmd_quat(x, y, sink);
    if (em->parsed()) return cmd_embeddable(a, b, sink);
    if (va->parsed()) return cmd_verify_all(a, b, sink);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ClosureCapExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
