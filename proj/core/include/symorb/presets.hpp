#pragma once

// Canonical symmetry groups of rings and Platonic solids acting on vertex labels.
//
// Vertex labelings (fixed for the life of the project):
//   C(n), D(n)  ring points 1..n clockwise; rotation i -> i+1, reflection i -> n+1-i.
//   T4          tetrahedron (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
//   O6          octahedron +x,-x,+y,-y,+z,-z, so antipodal pairs are (1,2),(3,4),(5,6).
//   O8          cube; 1..4 are the x=+1 face going around (+++, ++-, +--, +-+) and
//               5..8 lie below them (-++, -+-, ---, --+). The inscribed tetrahedra
//               are {1,3,6,8} and {2,4,5,7}; antipodes are 1-7, 2-8, 3-5, 4-6.
//   I12         icosahedron; 1..6 are (0,1,p), (0,-1,p), (1,p,0), (-1,p,0), (p,0,1),
//               (p,0,-1) with p the golden ratio, and label i+6 is the antipode of i.
//
// Full groups include reflections; `rotations_only` selects the proper rotations.

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "symorb/perm.hpp"

namespace symorb {

enum class PresetKind { Cyclic, Dihedral, Tetrahedron, Octahedron, Cube, Icosahedron };

struct PresetSpec {
  PresetKind kind = PresetKind::Cyclic;
  int n = 0;
  bool rotations_only = false;

  /// "C8", "D5", "T4", "O6", "O8", "I12"; a "+" suffix is appended for rotations_only.
  std::string name() const;
};

/// Parses "C8", "D8", "T4", "O6", "O8", "I12" (case-insensitive). A trailing
/// "r" or "+" ("O8r") selects the rotation subgroup.
PresetSpec parse_preset(std::string_view text);
bool looks_like_preset(std::string_view text);

PermGroup preset(const PresetSpec& spec);
PermGroup preset(std::string_view name, bool rotations_only = false);

PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n, bool rotations_only = false);

using Vec3 = std::array<double, 3>;

/// Vertex coordinates in label order for the polyhedral presets; empty for rings.
std::span<const Vec3> preset_vertices(PresetKind kind);
/// Edge list (1-based label pairs) of the polyhedron or ring behind a preset.
std::vector<std::pair<int, int>> preset_edges(const PresetSpec& spec);

}  // namespace symorb
