#include <doctest.h>

#include "oracles.hpp"
#include "symorb/presets.hpp"

using namespace symorb;

TEST_CASE("ring groups") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(cyclic_group(n).order() == static_cast<std::size_t>(n));
    CHECK(dihedral_group(n).order() == static_cast<std::size_t>(2 * n));
    CHECK(dihedral_group(n, true).order() == static_cast<std::size_t>(n));
  }
  CHECK(cyclic_group(8).generators().front() == parse_cycles("(1 2 3 4 5 6 7 8)"));
}

TEST_CASE("polyhedral groups are the automorphisms of their edge graphs") {
  // The full symmetry group of each solid is the automorphism group of its skeleton.
  for (const char* name : {"T4", "O6", "O8", "I12"}) {
    CAPTURE(name);
    const PresetSpec spec = parse_preset(name);
    const PermGroup G = preset(spec);
    const auto edges = preset_edges(spec);
    CHECK(oracle::elements(G) == oracle::graph_automorphisms(spec.n, edges));
  }
  CHECK(preset("T4").order() == 24);
  CHECK(preset("O6").order() == 48);
  CHECK(preset("O8").order() == 48);
  CHECK(preset("I12").order() == 120);
}

TEST_CASE("rotation subgroups") {
  CHECK(preset("T4", true).order() == 12);
  CHECK(preset("O6", true).order() == 24);
  CHECK(preset("O8", true).order() == 24);
  CHECK(preset("I12", true).order() == 60);
  CHECK(preset("O8r").order() == 24);
  CHECK(preset("I12+").order() == 60);
}

TEST_CASE("documented labelings") {
  // Antipodes: O6 (1,2),(3,4),(5,6); O8 1-7, 2-8, 3-5, 4-6; I12 i and i+6.
  CHECK(preset("O6").contains(parse_cycles("(1 2)(3 4)(5 6)", 6)));
  CHECK(preset("O8").contains(parse_cycles("(1 7)(2 8)(3 5)(4 6)", 8)));
  CHECK(preset("I12").contains(parse_cycles("(1 7)(2 8)(3 9)(4 10)(5 11)(6 12)", 12)));
  // Cube edges have 12 pairs, icosahedron 30, octahedron 12, tetrahedron 6.
  CHECK(preset_edges(parse_preset("O8")).size() == 12);
  CHECK(preset_edges(parse_preset("I12")).size() == 30);
  CHECK(preset_edges(parse_preset("O6")).size() == 12);
  CHECK(preset_edges(parse_preset("T4")).size() == 6);
  // The inscribed tetrahedra of the cube contain no edges.
  for (auto [a, b] : preset_edges(parse_preset("O8"))) {
    const bool a_even = a == 1 || a == 3 || a == 6 || a == 8;
    const bool b_even = b == 1 || b == 3 || b == 6 || b == 8;
    CHECK(a_even != b_even);
  }
}

TEST_CASE("preset parsing") {
  CHECK(parse_preset("c8").kind == PresetKind::Cyclic);
  CHECK(parse_preset("D5").n == 5);
  CHECK(parse_preset("O6").kind == PresetKind::Octahedron);
  CHECK(parse_preset("O8").kind == PresetKind::Cube);
  CHECK(parse_preset("O8+").rotations_only);
  CHECK(parse_preset("C8").name() == "C8");
  CHECK(looks_like_preset("I12"));
  CHECK_FALSE(looks_like_preset("(1 2)"));
  CHECK_THROWS_AS(parse_preset("T5"), InvalidArgument);
  CHECK_THROWS_AS(parse_preset("X3"), InvalidArgument);
  CHECK_THROWS_AS(parse_preset("C0"), InvalidArgument);
}
