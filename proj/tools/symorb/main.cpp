// symorb: distinct entanglements of symmetric multi-party states.
//
//   symorb group C8
//   symorb count C8 --m 2..4
//   symorb reduce O6 --m 2 --format dot --out o6.dot
//   symorb maximize C8 --x 1,2 --restarts 16
//   symorb verify theorem2 --scenario cube-tetra
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 resource limit.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symorb/combinatorics.hpp"
#include "symorb/error.hpp"
#include "symorb/group_theory.hpp"
#include "symorb/optimize.hpp"
#include "symorb/orbits.hpp"
#include "symorb/presets.hpp"
#include "symorb/serialize.hpp"
#include "symorb/suites.hpp"

namespace {

using namespace symorb;
using io::Json;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kResource = 3 };

struct Args {
  std::string command;
  std::string group;
  std::string n_text;
  int n = 0;  // n_text as a single value, 0 when absent
  std::string m;
  int d = 2;
  std::string measure = "concurrence";
  std::string x;
  std::string format = "json";
  bool dot = false;
  std::string out;
  std::uint64_t seed = MaxOptions{}.seed;
  int restarts = MaxOptions{}.restarts;
  int max_iterations = MaxOptions{}.max_iterations;
  int threads = 1;
  bool rotations_only = false;
  std::string which;     // state name or verify target
  std::string scenario;  // theorem2 scenario
  std::string blocks;    // weave blocks "1,3,6,8;2,4,5,7"
  std::string base = "w";
};

Json manifest(const Args& a) {
  Json j;
  j["command"] = a.command;
  if (!a.which.empty()) j["target"] = a.which;
  j["group"] = a.group.empty() ? Json(nullptr) : Json(a.group);
  j["rotations_only"] = a.rotations_only;
  j["n"] = a.n_text.empty() ? Json(nullptr) : Json(a.n_text);
  j["m"] = a.m.empty() ? Json(nullptr) : Json(a.m);
  j["d"] = a.d;
  j["measure"] = a.measure;
  j["x"] = a.x.empty() ? Json(nullptr) : Json(a.x);
  if (a.command == "state") {
    j["blocks"] = a.blocks.empty() ? Json(nullptr) : Json(a.blocks);
    j["base"] = a.base;
  }
  if (!a.scenario.empty()) j["scenario"] = a.scenario;
  j["options"] = Json{{"seed", a.seed}, {"restarts", a.restarts}, {"max_iterations", a.max_iterations}, {"threads", a.threads}};
  j["format"] = a.format;
  j["out"] = a.out.empty() ? Json(nullptr) : Json(a.out);
  return j;
}

Json envelope(const Args& a, Json result) {
  Json j;
  j["schema"] = io::kSchema;
  j["version"] = io::kVersion;
  j["manifest"] = manifest(a);
  j["result"] = std::move(result);
  return j;
}

// ---- argument interpretation ----

struct ResolvedGroup {
  PermGroup group;
  std::optional<PresetSpec> spec;
};

ResolvedGroup resolve_group(const Args& a) {
  if (a.group.empty()) throw InvalidArgument("a group is required (preset such as C8, or generators in cycle notation)");
  const std::string& text = a.group;
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidArgument("cannot read group file " + text.substr(1));
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("group file is not JSON: ") + e.what());
    }
    return {io::group_from_json(j), std::nullopt};
  }
  if (looks_like_preset(text)) {
    PresetSpec spec = parse_preset(text);
    if (a.rotations_only) spec.rotations_only = true;
    if (a.n != 0 && a.n != spec.n) throw InvalidArgument("--n disagrees with preset " + text);
    return {preset(spec), spec};
  }
  // Generators in cycle notation separated by ';'.
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');)
    if (part.find_first_not_of(" \t") != std::string::npos) parts.push_back(part);
  if (parts.empty()) throw InvalidArgument("empty generator list");
  int n = a.n;
  if (n == 0)
    for (const auto& p : parts) n = std::max(n, parse_cycles(p).degree());
  std::vector<Permutation> gens;
  for (const auto& p : parts) gens.push_back(parse_cycles(p, n));
  return {PermGroup::generate(n, std::move(gens), kDefaultElementCap, text), std::nullopt};
}

std::pair<int, int> parse_range(const std::string& text, int lo_default, int hi_default) {
  if (text.empty()) return {lo_default, hi_default};
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    if (hi < lo) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad range '" + text + "' (expected k or a..b)");
  }
}

int single_m(const Args& a, int n) {
  if (a.m.empty()) throw InvalidArgument("--m is required");
  const auto [lo, hi] = parse_range(a.m, 0, 0);
  if (lo != hi) throw InvalidArgument("--m must be a single value here");
  if (lo < 0 || lo > n) throw InvalidArgument("--m outside 0.." + std::to_string(n));
  return lo;
}

MaxOptions max_options(const Args& a) {
  MaxOptions o;
  o.seed = a.seed;
  o.restarts = a.restarts;
  o.max_iterations = a.max_iterations;
  o.threads = a.threads;
  o.validate();
  return o;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", io::round12(v));
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string cycles_text(const PermGroup& G) {
  std::vector<std::string> parts;
  for (const auto& g : G.generators()) parts.push_back(to_cycle_string(g));
  return parts.empty() ? "()" : join(parts, ", ");
}

// ---- commands: each returns (json result, text rendering, dot, passed) ----

struct Output {
  Json result;
  std::string text;
  std::string dot;
  bool passed = true;
};

Output cmd_group(const Args& a) {
  const auto [G, spec] = resolve_group(a);
  const auto classes = conjugacy_classes(G);
  const auto normals = normal_subgroups(G);
  const PermGroup N = normalizer(G);
  const auto chars = characters(G);

  Output o;
  Json j;
  j["group"] = io::to_json(G);
  j["order"] = G.order();
  j["generators"] = io::cycle_generators(G);
  j["transitive"] = G.is_transitive();
  j["abelian"] = is_abelian(G);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  j["conjugacy_class_sizes"] = sizes;
  Json ns = Json::array();
  for (const auto& H : normals)
    ns.push_back(Json{{"order", H.order()}, {"generators", io::cycle_generators(H)}, {"blocks", io::to_json(point_orbits(H))}});
  j["normal_subgroups"] = ns;
  j["normalizer"] = Json{{"order", N.order()}, {"generators", io::cycle_generators(N)}};
  j["characters"] = chars.size();
  o.result = j;

  std::ostringstream t;
  t << G.name() << ": degree " << G.degree() << ", order " << G.order() << (is_abelian(G) ? ", abelian" : "") << "\n";
  t << "generators  " << cycles_text(G) << "\n";
  t << "classes     " << classes.size() << " (sizes";
  for (auto s : sizes) t << " " << s;
  t << ")\n";
  t << "normal subgroups by order:";
  for (const auto& H : normals) t << " " << H.order();
  t << "\nnormalizer  order " << N.order() << ", generators " << cycles_text(N) << "\n";
  t << "characters  " << chars.size() << "\n";
  o.text = t.str();
  return o;
}

Output cmd_count(const Args& a) {
  const auto [G, spec] = resolve_group(a);
  const int n = G.degree();
  const auto [lo, hi] = parse_range(a.m, 0, n);
  if (lo < 0 || hi > n) throw InvalidArgument("--m outside 0.." + std::to_string(n));

  Output o;
  Json rows = Json::array();
  std::ostringstream t;
  t << "group " << G.name() << " (order " << G.order() << ")\n  m  burnside  formula  consistent\n";
  for (int m = lo; m <= hi; ++m) {
    const BigInt b = burnside_count(G, m);
    Json formula = nullptr, consistent = nullptr;
    std::string ftext = "-";
    if (spec && spec->kind == PresetKind::Dihedral && !spec->rotations_only && n >= 3) {
      const BigInt g = gupta_dihedral_count(n, m);
      formula = io::big(g);
      consistent = g == b;
      ftext = g.str();
    } else if (spec && (spec->kind == PresetKind::Cyclic || (spec->kind == PresetKind::Dihedral && spec->rotations_only)) &&
               n >= 3) {
      const ShevelevResult s = shevelev_cyclic_count(n, m);
      formula = io::big(s.value);
      consistent = s.consistent;
      ftext = s.value.str();
    }
    rows.push_back(Json{{"n", n}, {"m", m}, {"group", G.name()}, {"burnside", io::big(b)}, {"formula", formula}, {"consistent", consistent}});
    char line[128];
    std::snprintf(line, sizeof line, "%3d  %8s  %7s  %s\n", m, b.str().c_str(), ftext.c_str(),
                  consistent.is_null() ? "-" : (consistent.get<bool>() ? "yes" : "no"));
    t << line;
  }
  o.result = Json{{"rows", rows}};
  o.text = t.str();
  return o;
}

std::string orbit_text(const OrbitPartition& p) {
  std::ostringstream t;
  t << p.group.name() << ", m=" << p.m << ": " << p.orbits.size() << " orbits\n";
  for (std::size_t i = 0; i < p.orbits.size(); ++i)
    t << "  [" << i << "] rep " << to_string(p.orbits[i].rep) << "  size " << p.orbits[i].members.size() << "\n";
  return t.str();
}

Output cmd_orbits(const Args& a) {
  const auto [G, spec] = resolve_group(a);
  const int m = single_m(a, G.degree());
  const OrbitPartition p = enumerate_orbits(G, m);
  return {io::to_json(p), orbit_text(p), io::orbit_dot(p, spec), true};
}

Output cmd_reduce(const Args& a) {
  const auto [G, spec] = resolve_group(a);
  const int m = single_m(a, G.degree());
  const ReductionReport r = reduction_report(G, m);
  std::ostringstream t;
  t << G.name() << ", m=" << m << ": " << r.subsets.str() << " -> " << r.g_orbits.orbits.size() << " -> "
    << r.normalizer_classes.size() << " -> " << r.unique_count << " unique\n";
  t << "normalizer order " << r.normalizer->order() << "\n";
  for (std::size_t c = 0; c < r.normalizer_classes.size(); ++c) {
    std::vector<std::string> reps;
    bool reducible = false;
    for (std::size_t i : r.normalizer_classes[c]) {
      reps.push_back(to_string(r.g_orbits.orbits[i].rep));
      reducible = reducible || r.reducible(i);
    }
    t << "  class " << c << ": " << join(reps, " ~ ") << (reducible ? "  (reducible)" : "") << "\n";
  }
  return {io::to_json(r), t.str(), io::orbit_dot(r, spec), true};
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) blocks.push_back(parse_subset(part, 64).labels());
  return blocks;
}

StateVector named_state(const std::string& name, int n, int d) {
  if (name == "w") return w_state(n);
  if (name == "ghz") return ghz_state(n, d);
  if (name == "bell") return bell_state();
  if (name == "singlet") return singlet_state();
  throw InvalidArgument("unknown state '" + name + "' (w, ghz, bell, singlet, weave)");
}

Output cmd_state(const Args& a) {
  StateVector psi;
  if (a.which == "weave") {
    if (a.blocks.empty()) throw InvalidArgument("weave needs --blocks, e.g. \"1,3,6,8;2,4,5,7\"");
    PointPartition p;
    p.blocks = parse_blocks(a.blocks);
    for (const auto& b : p.blocks) p.n += static_cast<int>(b.size());
    if (a.n != 0 && a.n != p.n) throw InvalidArgument("--n disagrees with the blocks");
    std::sort(p.blocks.begin(), p.blocks.end());
    psi = weave_state(named_state(a.base, static_cast<int>(p.blocks.front().size()), a.d), p);
  } else {
    if (a.which != "bell" && a.which != "singlet" && a.n == 0) throw InvalidArgument("--n is required");
    psi = named_state(a.which, a.n, a.d);
  }

  Output o;
  Json j;
  j["state"] = io::to_json(psi);
  std::ostringstream t;
  t << a.which << ": n=" << psi.n() << " d=" << psi.d() << " norm " << fmt(psi.norm()) << "\n";
  if (!a.group.empty()) {
    const auto [G, spec] = resolve_group(a);
    if (G.degree() != psi.n()) throw InvalidArgument("group degree differs from the state size");
    const auto chi = is_invariant(psi, G);
    j["invariant"] = chi.has_value();
    j["character"] = chi ? io::to_json(*chi) : Json(nullptr);
    t << "invariant under " << G.name() << ": " << (chi ? (chi->is_trivial() ? "yes (trivial character)" : "yes") : "no") << "\n";
  }
  if (psi.d() == 2 && psi.n() >= 2) {
    Json pairs = Json::array();
    for (int i = 1; i <= psi.n(); ++i)
      for (int k = i + 1; k <= psi.n(); ++k) {
        const Subset x = Subset::of({i, k}, psi.n());
        const double c = concurrence(psi, x);
        pairs.push_back(Json{{"x", io::to_json(x)}, {"concurrence", io::number(c)}});
        t << "  C" << to_string(x) << " = " << fmt(c) << "\n";
      }
    j["pair_concurrence"] = pairs;
  }
  o.result = j;
  o.text = t.str();
  return o;
}

Output cmd_maximize(const Args& a) {
  const auto [G, spec] = resolve_group(a);
  if (a.x.empty()) throw InvalidArgument("--x is required, e.g. --x 1,3");
  const Subset x = parse_subset(a.x, G.degree());
  const Measure measure = Measure::parse(a.measure);
  measure.check_arity(x.size(), a.d);
  const MaxOptions opts = max_options(a);
  const MaximizationResult r = maximize(G, a.d, measure, x, opts);
  std::ostringstream t;
  t << "max " << measure.name() << " at " << to_string(x) << " over " << G.name() << "-invariant states: " << fmt(r.value) << "\n";
  for (const auto& s : r.sectors) t << "  sector dim " << s.dim << "  best " << fmt(s.best) << "\n";
  return {io::to_json(r), t.str(), "", true};
}

Output verify_theorem1_cmd(const Args& a) {
  const Measure measure = Measure::parse(a.measure);
  const MaxOptions opts = max_options(a);
  std::vector<ResolvedGroup> groups;
  if (a.group.empty()) {
    groups.push_back({cyclic_group(6), std::nullopt});
    groups.push_back({cyclic_group(8), std::nullopt});
  } else {
    groups.push_back(resolve_group(a));
  }
  std::vector<int> ms;
  for (const auto& g : groups) ms.push_back(a.m.empty() ? 2 : single_m(a, g.group.degree()));
  for (std::size_t i = 0; i < groups.size(); ++i) measure.check_arity(static_cast<std::size_t>(ms[i]), a.d);

  Output o;
  Json runs = Json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Theorem1Report r = verify_theorem1(groups[i].group, a.d, measure, ms[i], opts);
    runs.push_back(io::to_json(r));
    double worst = 0;
    for (const auto& tc : r.transports) worst = std::max(worst, tc.error);
    t << (r.pass ? "PASS" : "FAIL") << "  " << r.group.name() << " m=" << r.m << "  classes " << r.classes.size()
      << "  transport error " << fmt(worst) << "\n";
    for (const auto& c : r.classes) {
      std::vector<std::string> vals;
      for (double v : c.values) vals.push_back(fmt(v));
      t << "    class {" << join(vals, ", ") << "} spread " << fmt(c.spread) << "\n";
    }
    o.passed = o.passed && r.pass;
  }
  o.result = Json{{"pass", o.passed}, {"runs", runs}};
  o.text = t.str();
  return o;
}

Output verify_theorem2_cmd(const Args& a) {
  const Measure measure = Measure::parse(a.measure);
  const MaxOptions opts = max_options(a);
  std::vector<Theorem2Scenario> scenarios;
  if (a.scenario.empty() || a.scenario == "all")
    scenarios = theorem2_scenarios();
  else
    scenarios.push_back(theorem2_scenario(a.scenario));
  for (const auto& s : scenarios) measure.check_arity(s.x.size(), a.d);

  Output o;
  Json runs = Json::array();
  std::ostringstream t;
  for (const auto& s : scenarios) {
    const Theorem2Report r = verify_theorem2(s.group, s.subgroup, s.block, s.x, a.d, measure, opts);
    Json j = io::to_json(r);
    j["scenario"] = s.name;
    runs.push_back(std::move(j));
    t << (r.pass ? "PASS" : "FAIL") << "  " << s.name << "  lhs " << fmt(r.lhs.value) << "  rhs " << fmt(r.rhs.value)
      << "  weave error " << fmt(r.weave_error) << "  commutator " << fmt(r.commutator_residual) << "\n";
    o.passed = o.passed && r.pass;
  }
  o.result = Json{{"pass", o.passed}, {"runs", runs}};
  o.text = t.str();
  return o;
}

Output verify_formulas_cmd(const Args& a) {
  const auto [lo, hi] = parse_range(a.n_text, 3, 16);
  const FormulaReport r = verify_formulas(lo, hi);
  Output o;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"n", row.n},
                        {"m", row.m},
                        {"burnside_cyclic", io::big(row.burnside_cyclic)},
                        {"burnside_dihedral", io::big(row.burnside_dihedral)},
                        {"enumerated_cyclic", io::big(row.enumerated_cyclic)},
                        {"enumerated_dihedral", io::big(row.enumerated_dihedral)},
                        {"gupta", io::big(row.gupta)},
                        {"shevelev", io::big(row.shevelev)},
                        {"burnside_consistent", row.burnside_consistent},
                        {"gupta_consistent", row.gupta_consistent},
                        {"shevelev_consistent", row.shevelev_consistent}});
  o.result = Json{{"pass", r.pass}, {"rows", r.rows.size()}, {"shevelev_mismatches", r.shevelev_mismatches}, {"table", rows}};
  std::ostringstream t;
  t << (r.pass ? "PASS" : "FAIL") << "  n=" << lo << ".." << hi << ": " << r.rows.size()
    << " (n,m) rows; Burnside and bracelet formula " << (r.pass ? "consistent" : "INCONSISTENT") << "; closed-form necklace expression differs in "
    << r.shevelev_mismatches << " rows\n";
  for (const auto& row : r.rows)
    if (!row.shevelev_consistent)
      t << "    n=" << row.n << " m=" << row.m << "  necklace formula " << row.shevelev.str() << "  burnside " << row.burnside_cyclic.str() << "\n";
  o.text = t.str();
  o.passed = r.pass;
  return o;
}

Output run(const Args& a) {
  if (a.command == "group") return cmd_group(a);
  if (a.command == "count") return cmd_count(a);
  if (a.command == "orbits") return cmd_orbits(a);
  if (a.command == "reduce") return cmd_reduce(a);
  if (a.command == "state") return cmd_state(a);
  if (a.command == "maximize") return cmd_maximize(a);
  if (a.which == "theorem1") return verify_theorem1_cmd(a);
  if (a.which == "theorem2") return verify_theorem2_cmd(a);
  return verify_formulas_cmd(a);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  // Write beside the target and rename, so a failure never leaves a partial file.
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << text;
    if (!f.flush()) throw InvalidArgument("cannot write " + path);
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symorb: orbits, normalizers and maximal entanglement of permutation-symmetric states"};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub, bool positional_group) {
    if (positional_group)
      sub->add_option("group,--group", a.group, "preset (C8, D8, T4, O6, O8, I12) or generators \"(1 2 3);(1 2)\" or @file.json");
    else
      sub->add_option("--group", a.group, "preset or generators");
    sub->add_option("--n", a.n_text, "degree for generator input, particle count, or n range a..b for verify formulas");
    sub->add_flag("--rotations-only", a.rotations_only, "use the rotation subgroup of a polyhedral preset");
    sub->add_option("--format", a.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_flag("--dot", a.dot, "same as --format dot");
    sub->add_option("--out", a.out, "output file (default stdout)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--d", a.d, "local dimension")->check(CLI::Range(2, kMaxLocalDim));
    sub->add_option("--measure", a.measure, "concurrence, negativity[:k] or entropy");
    sub->add_option("--seed", a.seed, "random seed");
    sub->add_option("--restarts", a.restarts, "random starts per character sector")->check(CLI::PositiveNumber);
    sub->add_option("--max-iterations", a.max_iterations, "sweeps per start")->check(CLI::PositiveNumber);
    sub->add_option("--threads", a.threads, "worker threads for restarts")->check(CLI::Range(1, 256));
  };

  auto* group = app.add_subcommand("group", "order, classes, normal subgroups and normalizer of a group");
  add_common(group, true);
  auto* count = app.add_subcommand("count", "orbit counts of m-subsets with closed-form comparisons");
  add_common(count, true);
  count->add_option("--m", a.m, "subset size k or range a..b (default 0..n)");
  auto* orbits = app.add_subcommand("orbits", "orbit partition of the m-subsets");
  add_common(orbits, true);
  orbits->add_option("--m", a.m, "subset size")->required();
  auto* reduce = app.add_subcommand("reduce", "orbits, normalizer classes and normal-subgroup reductions");
  add_common(reduce, true);
  reduce->add_option("--m", a.m, "subset size")->required();
  auto* state = app.add_subcommand("state", "build a named state: w, ghz, bell, singlet, weave");
  add_common(state, false);
  state->add_option("name", a.which, "state name")->required()->check(CLI::IsMember({"w", "ghz", "bell", "singlet", "weave"}));
  state->add_option("--d", a.d, "local dimension (ghz only)")->check(CLI::Range(2, kMaxLocalDim));
  state->add_option("--blocks", a.blocks, "weave blocks, e.g. \"1,3,6,8;2,4,5,7\"");
  state->add_option("--base", a.base, "state placed on each weave block")->check(CLI::IsMember({"w", "ghz", "bell", "singlet"}));
  auto* maximize = app.add_subcommand("maximize", "maximize a measure at x over the invariant states");
  add_common(maximize, true);
  add_search(maximize);
  maximize->add_option("--x", a.x, "party labels, e.g. 1,3")->required();
  auto* verify = app.add_subcommand("verify", "numerical checks: theorem1, theorem2, formulas");
  add_common(verify, false);
  add_search(verify);
  verify->add_option("which", a.which, "theorem1, theorem2 or formulas")->required()->check(CLI::IsMember({"theorem1", "theorem2", "formulas"}));
  verify->add_option("--m", a.m, "subset size for theorem1 (default 2)");
  verify->add_option("--scenario", a.scenario, "theorem2 scenario: c4-pair, octahedron-inversion, cube-tetra, all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }
  for (auto* sub : app.get_subcommands()) a.command = sub->get_name();
  if (a.dot) a.format = "dot";

  try {
    if (!a.n_text.empty() && !(a.command == "verify" && a.which == "formulas")) {
      const auto [lo, hi] = parse_range(a.n_text, 0, 0);
      if (lo != hi || lo < 1 || lo > kMaxDegree) throw InvalidArgument("--n must be a single value in 1..255");
      a.n = lo;
    }
    Output o = run(a);
    std::string text;
    if (a.format == "dot") {
      if (o.dot.empty()) throw InvalidArgument("--format dot is available for orbits and reduce only");
      text = o.dot;
    } else if (a.format == "text") {
      text = o.text;
    } else {
      text = io::dump(envelope(a, std::move(o.result)));
    }
    write_output(a.out, text);
    return o.passed ? kOk : kFailed;
  } catch (const InvalidArgument& e) {
    std::cerr << "symorb: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "symorb: resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "symorb: error: " << e.what() << "\n";
    return kFailed;
  }
}
