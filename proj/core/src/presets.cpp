#include "symorb/presets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace symorb {

namespace {

constexpr double kPhi = std::numbers::phi;

constexpr std::array<Vec3, 4> kTetra{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
constexpr std::array<Vec3, 6> kOcta{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
constexpr std::array<Vec3, 8> kCube{{{1, 1, 1},
                                     {1, 1, -1},
                                     {1, -1, -1},
                                     {1, -1, 1},
                                     {-1, 1, 1},
                                     {-1, 1, -1},
                                     {-1, -1, -1},
                                     {-1, -1, 1}}};
constexpr std::array<Vec3, 12> kIcosa{{{0, 1, kPhi},
                                       {0, -1, kPhi},
                                       {1, kPhi, 0},
                                       {-1, kPhi, 0},
                                       {kPhi, 0, 1},
                                       {kPhi, 0, -1},
                                       {0, -1, -kPhi},
                                       {0, 1, -kPhi},
                                       {-1, -kPhi, 0},
                                       {1, -kPhi, 0},
                                       {-kPhi, 0, -1},
                                       {-kPhi, 0, 1}}};

using Mat3 = std::array<std::array<double, 3>, 3>;

Vec3 apply(const Mat3& m, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

Mat3 rotation(Vec3 axis, double angle) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  for (auto& a : axis) a /= len;
  const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  const auto [x, y, z] = axis;
  return Mat3{{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
               {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
               {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

constexpr Mat3 kInversion{{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};

// Vertex permutation induced by an orthogonal map; vertices must map onto vertices.
Permutation induced(std::span<const Vec3> verts, const Mat3& m) {
  std::vector<int> img;
  for (const auto& v : verts) {
    const Vec3 w = apply(m, v);
    int match = 0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      const double d = std::abs(w[0] - verts[j][0]) + std::abs(w[1] - verts[j][1]) + std::abs(w[2] - verts[j][2]);
      if (d < 1e-9) match = static_cast<int>(j) + 1;
    }
    if (match == 0) throw std::logic_error("preset matrix does not preserve the vertex set");
    img.push_back(match);
  }
  return Permutation::from_images(img);
}

PermGroup solid_group(std::span<const Vec3> verts, std::vector<Mat3> rotations, const Mat3& improper,
                      bool rotations_only, std::string name) {
  if (!rotations_only) rotations.push_back(improper);
  std::vector<Permutation> gens;
  for (const auto& m : rotations) gens.push_back(induced(verts, m));
  return PermGroup::generate(static_cast<int>(verts.size()), std::move(gens), kDefaultElementCap, std::move(name));
}

}  // namespace

std::string PresetSpec::name() const {
  std::string s;
  switch (kind) {
    case PresetKind::Cyclic: s = "C" + std::to_string(n); break;
    case PresetKind::Dihedral: s = "D" + std::to_string(n); break;
    case PresetKind::Tetrahedron: s = "T4"; break;
    case PresetKind::Octahedron: s = "O6"; break;
    case PresetKind::Cube: s = "O8"; break;
    case PresetKind::Icosahedron: s = "I12"; break;
  }
  if (rotations_only && kind != PresetKind::Cyclic) s += "+";
  return s;
}

PresetSpec parse_preset(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  PresetSpec spec;
  if (!t.empty() && (t.back() == '+' || t.back() == 'R')) {
    spec.rotations_only = true;
    t.pop_back();
  }
  if (t.size() < 2) throw InvalidArgument("unknown group preset '" + std::string(text) + "'");
  int n = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw InvalidArgument("unknown group preset '" + std::string(text) + "'");
    n = n * 10 + (t[i] - '0');
    if (n > kMaxDegree) throw InvalidArgument("preset degree too large in '" + std::string(text) + "'");
  }
  spec.n = n;
  switch (t[0]) {
    case 'C': spec.kind = PresetKind::Cyclic; break;
    case 'D': spec.kind = PresetKind::Dihedral; break;
    case 'T': spec.kind = PresetKind::Tetrahedron; break;
    case 'O': spec.kind = n == 6 ? PresetKind::Octahedron : PresetKind::Cube; break;
    case 'I': spec.kind = PresetKind::Icosahedron; break;
    default: throw InvalidArgument("unknown group preset '" + std::string(text) + "'");
  }
  const bool ok = (spec.kind == PresetKind::Cyclic || spec.kind == PresetKind::Dihedral) ? n >= 3
                  : spec.kind == PresetKind::Tetrahedron                                  ? n == 4
                  : spec.kind == PresetKind::Octahedron                                   ? n == 6
                  : spec.kind == PresetKind::Cube                                         ? n == 8
                                                                                          : n == 12;
  if (!ok) throw InvalidArgument("unknown group preset '" + std::string(text) + "'");
  return spec;
}

bool looks_like_preset(std::string_view text) {
  try {
    parse_preset(text);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group needs n >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return PermGroup::generate(n, {Permutation::from_images(img)}, kDefaultElementCap, "C" + std::to_string(n));
}

PermGroup dihedral_group(int n, bool rotations_only) {
  if (rotations_only) return cyclic_group(n).renamed("D" + std::to_string(n) + "+");
  if (n < 1) throw InvalidArgument("dihedral group needs n >= 1");
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    refl[static_cast<std::size_t>(i)] = n - i;
  }
  return PermGroup::generate(n, {Permutation::from_images(rot), Permutation::from_images(refl)}, kDefaultElementCap,
                             "D" + std::to_string(n));
}

PermGroup preset(const PresetSpec& spec) {
  const std::string name = spec.name();
  constexpr double kQuarter = std::numbers::pi / 2;
  constexpr double kThird = 2 * std::numbers::pi / 3;
  switch (spec.kind) {
    case PresetKind::Cyclic:
      if (spec.n < 3) throw InvalidArgument("C(n) preset needs n >= 3");
      return cyclic_group(spec.n);
    case PresetKind::Dihedral:
      if (spec.n < 3) throw InvalidArgument("D(n) preset needs n >= 3");
      return dihedral_group(spec.n, spec.rotations_only).renamed(name);
    case PresetKind::Tetrahedron: {
      // Mirror plane x = y swaps vertices 2 and 3.
      const Mat3 mirror{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
      return solid_group(kTetra, {rotation({1, 1, 1}, kThird), rotation({1, 0, 0}, std::numbers::pi)}, mirror,
                         spec.rotations_only, name);
    }
    case PresetKind::Octahedron:
      return solid_group(kOcta, {rotation({1, 0, 0}, kQuarter), rotation({0, 1, 0}, kQuarter)}, kInversion,
                         spec.rotations_only, name);
    case PresetKind::Cube:
      return solid_group(kCube, {rotation({1, 0, 0}, kQuarter), rotation({0, 1, 0}, kQuarter)}, kInversion,
                         spec.rotations_only, name);
    case PresetKind::Icosahedron:
      return solid_group(kIcosa, {rotation(kIcosa[0], 2 * std::numbers::pi / 5), rotation({1, 1, 1}, kThird)},
                         kInversion, spec.rotations_only, name);
  }
  throw InvalidArgument("unknown preset");
}

PermGroup preset(std::string_view name, bool rotations_only) {
  PresetSpec spec = parse_preset(name);
  spec.rotations_only = spec.rotations_only || rotations_only;
  return preset(spec);
}

std::span<const Vec3> preset_vertices(PresetKind kind) {
  switch (kind) {
    case PresetKind::Tetrahedron: return kTetra;
    case PresetKind::Octahedron: return kOcta;
    case PresetKind::Cube: return kCube;
    case PresetKind::Icosahedron: return kIcosa;
    default: return {};
  }
}

std::vector<std::pair<int, int>> preset_edges(const PresetSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  const auto verts = preset_vertices(spec.kind);
  if (verts.empty()) {
    for (int i = 1; i <= spec.n; ++i) edges.emplace_back(std::min(i, i % spec.n + 1), std::max(i, i % spec.n + 1));
    std::sort(edges.begin(), edges.end());
    return edges;
  }
  // Edges join nearest-neighbour vertices.
  auto dist2 = [&](std::size_t a, std::size_t b) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (verts[a][k] - verts[b][k]) * (verts[a][k] - verts[b][k]);
    return s;
  };
  double best = 1e300;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) best = std::min(best, dist2(a, b));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (dist2(a, b) < best + 1e-9) edges.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return edges;
}

}  // namespace symorb
