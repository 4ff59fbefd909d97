#include "symorb/suites.hpp"

#include "symorb/orbits.hpp"
#include "symorb/presets.hpp"

namespace symorb {

std::vector<Theorem2Scenario> theorem2_scenarios() {
  std::vector<Theorem2Scenario> out;
  out.push_back({"c4-pair", cyclic_group(4), PermGroup::generate(4, {parse_cycles("(1 3)(2 4)", 4)}, kDefaultElementCap, "C2"),
                 {1, 3}, Subset::of({1, 3}, 4), 1.0});
  out.push_back({"octahedron-inversion", preset("O6"),
                 PermGroup::generate(6, {parse_cycles("(1 2)(3 4)(5 6)", 6)}, kDefaultElementCap, "inversion"), {1, 2},
                 Subset::of({1, 2}, 6), 1.0});
  const PermGroup o8 = preset("O8");
  out.push_back({"cube-tetra", o8, derived_subgroup(o8).renamed("T"), {1, 3, 6, 8}, Subset::of({1, 3}, 8), 0.5});
  return out;
}

Theorem2Scenario theorem2_scenario(const std::string& name) {
  for (auto& s : theorem2_scenarios())
    if (s.name == name) return s;
  throw InvalidArgument("unknown scenario '" + name + "' (c4-pair, octahedron-inversion, cube-tetra)");
}

FormulaReport verify_formulas(int n_lo, int n_hi) {
  if (n_lo < 3 || n_hi < n_lo) throw InvalidArgument("formula range must satisfy 3 <= lo <= hi");
  if (n_hi > kMaxEnumerationDegree) throw ResourceError("formula check enumerates orbits; n <= 20");
  FormulaReport rep;
  bool ok = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    const PermGroup c = cyclic_group(n);
    const PermGroup d = dihedral_group(n);
    for (int m = 0; m <= n; ++m) {
      FormulaRow row;
      row.n = n;
      row.m = m;
      row.enumerated_cyclic = enumerate_orbits(c, m).orbits.size();
      row.enumerated_dihedral = enumerate_orbits(d, m).orbits.size();
      row.burnside_cyclic = burnside_count(c, m);
      row.burnside_dihedral = burnside_count(d, m);
      row.gupta = gupta_dihedral_count(n, m);
      const ShevelevResult s = shevelev_cyclic_count(n, m);
      row.shevelev = s.value;
      row.gupta_consistent = row.gupta == row.burnside_dihedral;
      row.shevelev_consistent = s.consistent;
      row.burnside_consistent =
          row.enumerated_cyclic == row.burnside_cyclic && row.enumerated_dihedral == row.burnside_dihedral;
      if (!row.shevelev_consistent) ++rep.shevelev_mismatches;
      ok = ok && row.gupta_consistent && row.burnside_consistent;
      rep.rows.push_back(std::move(row));
    }
  }
  rep.pass = ok;
  return rep;
}

}  // namespace symorb
