#include "symorb/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace symorb::io {

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // no negative zero
}

Json number(double v) { return round12(v); }

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const Permutation& g) { return g.images(); }

Json to_json(const Subset& x) { return x.labels(); }

Json to_json(const PermGroup& G) {
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(to_json(g));
  return Json{{"n", G.degree()}, {"generators", gens}, {"name", G.name()}};
}

Json cycle_generators(const PermGroup& G) {
  Json out = Json::array();
  for (const auto& g : G.generators()) out.push_back(to_cycle_string(g));
  return out;
}

Json to_json(const PointPartition& p) { return p.blocks; }

Json to_json(const Character& chi) {
  Json turns = Json::array();
  for (const auto& g : chi.group().generators()) {
    const Turns t = chi.turns(g);
    turns.push_back(std::to_string(t.num) + "/" + std::to_string(t.den));
  }
  return Json{{"trivial", chi.is_trivial()}, {"generator_turns", turns}};
}

namespace {

Json complex_json(Complex c) { return Json::array({number(c.real()), number(c.imag())}); }

}  // namespace

Json to_json(const StateVector& psi) {
  Json amps = Json::array();
  for (const auto& a : psi.amplitudes()) amps.push_back(complex_json(a));
  return Json{{"n", psi.n()}, {"d", psi.d()}, {"amplitudes", amps}};
}

Json to_json(const DensityMatrix& rho) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < rho.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < rho.matrix.cols(); ++j) row.push_back(complex_json(rho.matrix(i, j)));
    rows.push_back(row);
  }
  return Json{{"labels", to_json(rho.labels)}, {"d", rho.d}, {"matrix", rows}};
}

Json to_json(const OrbitPartition& p) {
  Json orbits = Json::array();
  for (const auto& o : p.orbits) {
    Json members = Json::array();
    for (const auto& x : o.members) members.push_back(to_json(x));
    orbits.push_back(Json{{"rep", to_json(o.rep)}, {"size", o.members.size()}, {"members", members}});
  }
  return Json{{"group", to_json(p.group)}, {"m", p.m}, {"orbit_count", p.orbits.size()}, {"orbits", orbits}};
}

Json to_json(const ReductionReport& r) {
  Json j;
  j["group"] = to_json(r.group);
  j["m"] = r.m;
  j["stages"] = Json{{"subsets", big(r.subsets)},
                     {"g_orbits", r.g_orbits.orbits.size()},
                     {"normalizer_classes", r.normalizer_classes.size()},
                     {"unique", r.unique_count}};
  Json orbits = Json::array();
  for (std::size_t i = 0; i < r.g_orbits.orbits.size(); ++i) {
    const auto& o = r.g_orbits.orbits[i];
    Json members = Json::array();
    for (const auto& x : o.members) members.push_back(to_json(x));
    orbits.push_back(Json{{"index", i},
                          {"rep", to_json(o.rep)},
                          {"size", o.members.size()},
                          {"class", r.normalizer_classes.empty() ? Json(nullptr) : Json(r.class_of(i))},
                          {"reducible", r.reducible(i)},
                          {"members", members}});
  }
  j["orbits"] = orbits;
  if (r.normalizer) {
    j["normalizer"] = Json{{"order", r.normalizer->order()}, {"generators", cycle_generators(*r.normalizer)}};
  }
  j["normalizer_classes"] = r.normalizer_classes;
  Json entries = Json::array();
  for (const auto& e : r.theorem2_entries) {
    entries.push_back(Json{{"orbit", e.orbit},
                           {"subgroup", Json{{"order", e.subgroup.order()}, {"generators", cycle_generators(e.subgroup)}}},
                           {"block", e.block},
                           {"member", to_json(e.member)},
                           {"restricted", Json{{"order", e.restricted.group.order()},
                                               {"generators", cycle_generators(e.restricted.group)}}}});
  }
  j["theorem2_entries"] = entries;
  return j;
}

Json to_json(const MaximizationResult& r, bool diagnostics) {
  Json j;
  j["measure"] = r.measure.name();
  j["x"] = to_json(r.x);
  j["value"] = number(r.value);
  j["character"] = to_json(r.character);
  j["evaluations"] = r.evaluations;
  if (diagnostics) {
    Json sectors = Json::array();
    for (const auto& s : r.sectors) {
      Json values = Json::array();
      for (double v : s.restart_values) values.push_back(number(v));
      sectors.push_back(Json{{"character", to_json(s.character)},
                             {"dim", s.dim},
                             {"best", number(s.best)},
                             {"restart_values", values},
                             {"restart_iterations", s.restart_iterations}});
    }
    j["sectors"] = sectors;
  }
  j["witness"] = to_json(r.witness);
  return j;
}

Json to_json(const Theorem1Report& r) {
  Json j;
  j["group"] = to_json(r.group);
  j["d"] = r.d;
  j["measure"] = r.measure.name();
  j["m"] = r.m;
  j["pass"] = r.pass;
  j["tolerance"] = number(r.tolerance);
  j["transport_tolerance"] = number(r.transport_tolerance);
  if (r.reduction.normalizer)
    j["normalizer"] = Json{{"order", r.reduction.normalizer->order()},
                           {"generators", cycle_generators(*r.reduction.normalizer)}};
  Json orbits = Json::array();
  for (std::size_t i = 0; i < r.orbit_results.size(); ++i)
    orbits.push_back(Json{{"index", i},
                          {"rep", to_json(r.reduction.g_orbits.orbits[i].rep)},
                          {"maximum", to_json(r.orbit_results[i], true)}});
  j["orbits"] = orbits;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json values = Json::array();
    for (double v : c.values) values.push_back(number(v));
    classes.push_back(Json{{"orbits", c.orbits}, {"values", values}, {"spread", number(c.spread)}, {"pass", c.pass}});
  }
  j["classes"] = classes;
  Json transports = Json::array();
  for (const auto& t : r.transports)
    transports.push_back(Json{{"x", to_json(t.x)},
                              {"nu", to_cycle_string(t.nu)},
                              {"image", to_json(t.image)},
                              {"value", number(t.value)},
                              {"transported", number(t.transported)},
                              {"error", number(t.error)},
                              {"stays_invariant", t.stays_invariant}});
  j["transports"] = transports;
  return j;
}

Json to_json(const Theorem2Report& r) {
  Json j;
  j["group"] = to_json(r.group);
  j["subgroup"] = Json{{"order", r.subgroup.order()}, {"generators", cycle_generators(r.subgroup)}};
  j["block"] = r.block;
  j["x"] = to_json(r.x);
  j["d"] = r.d;
  j["measure"] = r.measure.name();
  j["pass"] = r.pass;
  j["lhs"] = number(r.lhs.value);
  j["rhs"] = number(r.rhs.value);
  j["difference"] = number(r.difference);
  j["woven_value"] = number(r.woven_value);
  j["weave_error"] = number(r.weave_error);
  j["woven_invariant"] = r.woven_character.has_value();
  if (r.woven_character) j["woven_character"] = to_json(*r.woven_character);
  j["commutator_residual"] = number(r.commutator_residual);
  j["tolerances"] = Json{{"difference", number(r.tolerance)},
                         {"weave", number(r.weave_tolerance)},
                         {"commutator", number(r.commutator_tolerance)}};
  j["restricted"] = Json{{"labels", r.restricted.labels},
                         {"order", r.restricted.group.order()},
                         {"generators", cycle_generators(r.restricted.group)}};
  j["lhs_detail"] = to_json(r.lhs, true);
  j["rhs_detail"] = to_json(r.rhs, true);
  return j;
}

PermGroup group_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      if (g.is_string()) {
        gens.push_back(parse_cycles(g.get<std::string>(), n));
      } else {
        const auto images = g.get<std::vector<int>>();
        if (static_cast<int>(images.size()) != n) throw InvalidArgument("generator length differs from n");
        gens.push_back(Permutation::from_images(images));
      }
    }
    return PermGroup::generate(n, gens, kDefaultElementCap, j.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed group JSON: ") + e.what());
  }
}

StateVector state_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    std::vector<Complex> amps;
    for (const auto& a : j.at("amplitudes")) {
      if (a.size() != 2) throw InvalidArgument("amplitude must be [re, im]");
      amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return StateVector(n, d, std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed state JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::pair<double, double>> layout(int n, const std::optional<PresetSpec>& spec) {
  std::vector<std::pair<double, double>> out;
  const bool polyhedron = spec && spec->kind != PresetKind::Cyclic && spec->kind != PresetKind::Dihedral;
  if (polyhedron) {
    for (const auto& v : preset_vertices(spec->kind)) {
      const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      out.emplace_back((v[1] + 0.45 * v[0]) / r, (v[2] + 0.25 * v[0]) / r);
    }
    return out;
  }
  // Label 1 at twelve o'clock, then clockwise.
  for (int i = 0; i < n; ++i) {
    const double t = std::numbers::pi / 2 - 2 * std::numbers::pi * i / n;
    out.emplace_back(std::cos(t), std::sin(t));
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", round12(v));
  return buf;
}

std::string render(const OrbitPartition& p, const std::optional<PresetSpec>& spec, const ReductionReport* r) {
  const int n = p.group.degree();
  const auto pos = layout(n, spec);
  std::vector<std::pair<int, int>> edges;
  if (spec) edges = preset_edges(*spec);

  std::ostringstream os;
  os << "graph orbits {\n";
  os << "  graph [label=\"" << p.group.name() << ", m=" << p.m << ", " << p.orbits.size() << " orbits\"];\n";
  os << "  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n";
  for (std::size_t k = 0; k < p.orbits.size(); ++k) {
    const auto& o = p.orbits[k];
    const double dx = 3.0 * static_cast<double>(k);
    std::string caption = "orbit " + std::to_string(k) + " rep " + to_string(o.rep) + ", " +
                          std::to_string(o.members.size()) + " members";
    if (r && !r->normalizer_classes.empty()) caption += ", class " + std::to_string(r->class_of(k));
    if (r && r->reducible(k)) caption += ", reducible";
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"" << caption << "\";\n";
    for (int l = 1; l <= n; ++l) {
      const auto [u, v] = pos[static_cast<std::size_t>(l - 1)];
      os << "    o" << k << "_" << l << " [label=\"" << l << "\", pos=\"" << fmt(dx + u) << "," << fmt(v) << "!\"";
      if (o.rep.contains(l)) os << ", style=filled, fillcolor=\"#e4572e\"";
      os << "];\n";
    }
    for (const auto& [a, b] : edges) os << "    o" << k << "_" << a << " -- o" << k << "_" << b << " [color=gray];\n";
    const auto& labels = o.rep.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        os << "    o" << k << "_" << labels[i] << " -- o" << k << "_" << labels[j] << " [color=\"#e4572e\", penwidth=2];\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string orbit_dot(const ReductionReport& r, const std::optional<PresetSpec>& spec) {
  return render(r.g_orbits, spec, &r);
}

std::string orbit_dot(const OrbitPartition& p, const std::optional<PresetSpec>& spec) {
  return render(p, spec, nullptr);
}

}  // namespace symorb::io
