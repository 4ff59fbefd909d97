#pragma once

// JSON encodings of the core types and DOT drawings of orbit partitions.
// Reports use ordered keys and round floats to 12 significant digits so that
// equal inputs give byte-identical text.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "symorb/optimize.hpp"
#include "symorb/orbits.hpp"
#include "symorb/presets.hpp"
#include "symorb/quantum.hpp"

namespace symorb::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symorb/1";
inline constexpr const char* kVersion = "0.1.0";

double round12(double v);
Json number(double v);
Json big(const BigInt& v);  // integer when it fits in 64 bits, else a decimal string

Json to_json(const Permutation& g);  // 1-based images
Json to_json(const Subset& x);
Json to_json(const PermGroup& G);  // {n, generators, name}
Json cycle_generators(const PermGroup& G);
Json to_json(const PointPartition& p);
Json to_json(const Character& chi);
Json to_json(const StateVector& psi);
Json to_json(const DensityMatrix& rho);
Json to_json(const OrbitPartition& p);
Json to_json(const ReductionReport& r);
Json to_json(const MaximizationResult& r, bool diagnostics = true);
Json to_json(const Theorem1Report& r);
Json to_json(const Theorem2Report& r);

/// Accepts generators either as image arrays or as cycle strings.
PermGroup group_from_json(const Json& j);
StateVector state_from_json(const Json& j);

std::string dump(const Json& j);

/// 2-D drawing coordinates of each label: a unit circle for rings, an oblique
/// projection (u, v) = (y + 0.45x, z + 0.25x) of the solid for polyhedra.
std::vector<std::pair<double, double>> layout(int n, const std::optional<PresetSpec>& spec);

/// One cluster per G-orbit with the representative's labels filled and joined.
/// Cluster captions carry the orbit size, normalizer class and reducibility.
std::string orbit_dot(const ReductionReport& r, const std::optional<PresetSpec>& spec);
std::string orbit_dot(const OrbitPartition& p, const std::optional<PresetSpec>& spec);

}  // namespace symorb::io
