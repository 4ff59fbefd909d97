#pragma once

// Named verification runs shared by the command line tool and the tests.

#include <string>
#include <vector>

#include "symorb/combinatorics.hpp"
#include "symorb/optimize.hpp"

namespace symorb {

struct Theorem2Scenario {
  std::string name;
  PermGroup group;
  PermGroup subgroup;
  std::vector<int> block;
  Subset x;
  double expected = 0;  // known maximum of the pair concurrence
};

/// c4-pair: C4 with H = <(1 3)(2 4)>, Y = x = {1,3}.
/// octahedron-inversion: O6 with H = <inversion>, Y = x = {1,2}.
/// cube-tetra: O8 with H = T (the derived subgroup), Y = {1,3,6,8}, x = {1,3}.
std::vector<Theorem2Scenario> theorem2_scenarios();
Theorem2Scenario theorem2_scenario(const std::string& name);

struct FormulaRow {
  int n = 0;
  int m = 0;
  BigInt enumerated_cyclic;   // explicit orbit count under C_n
  BigInt burnside_cyclic;
  BigInt enumerated_dihedral;
  BigInt burnside_dihedral;
  BigInt gupta;
  BigInt shevelev;            // closed-form necklace expression, evaluated as written
  bool gupta_consistent = false;
  bool shevelev_consistent = false;
  /// Burnside agrees with enumeration for both groups.
  bool burnside_consistent = false;
};

struct FormulaReport {
  std::vector<FormulaRow> rows;
  std::size_t shevelev_mismatches = 0;
  /// Burnside self-consistency and the bracelet formula; the necklace formula is only recorded.
  bool pass = false;
};

FormulaReport verify_formulas(int n_lo, int n_hi);

}  // namespace symorb
