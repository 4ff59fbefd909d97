#pragma once

// Orbits of X_m (the m-subsets of party labels) under a group, their merging
// under the normalizer, and reducibility through normal subgroups.

#include <optional>
#include <vector>

#include "symorb/combinatorics.hpp"
#include "symorb/group_theory.hpp"
#include "symorb/perm.hpp"

namespace symorb {

inline constexpr int kMaxEnumerationDegree = 20;

struct Orbit {
  Subset rep;                  // lexicographically least member
  std::vector<Subset> members;  // sorted
};

struct OrbitPartition {
  PermGroup group;
  int m = 0;
  std::vector<Orbit> orbits;  // ordered by representative

  std::size_t orbit_of(const Subset& x) const;
  std::size_t total_members() const;
};

struct Theorem2Entry {
  std::size_t orbit = 0;
  PermGroup subgroup;        // proper nontrivial normal subgroup H
  std::vector<int> block;    // Y, one H-orbit of labels
  Restriction restricted;    // H|Y with its label map
  Subset member;             // least orbit member inside Y
};

struct ReductionReport {
  PermGroup group;
  int m = 0;
  BigInt subsets;  // |X_m|
  OrbitPartition g_orbits;
  std::optional<PermGroup> normalizer;
  /// Partition of orbit indices into normalizer orbits, each ascending, ordered by least index.
  std::vector<std::vector<std::size_t>> normalizer_classes;
  std::vector<Theorem2Entry> theorem2_entries;
  std::size_t unique_count = 0;

  bool reducible(std::size_t orbit) const;
  std::size_t class_of(std::size_t orbit) const;
};

/// Throws ResourceError above kMaxEnumerationDegree.
OrbitPartition enumerate_orbits(const PermGroup& G, int m);

/// Orbits merged into normalizer classes. A precomputed normalizer may be supplied.
ReductionReport normalizer_classes(const PermGroup& G, int m, const std::optional<PermGroup>& N = std::nullopt);

/// One entry per (orbit, proper nontrivial normal subgroup H) for which some
/// orbit member lies inside a single H-orbit Y with |Y| >= m. Empty for m < 2.
ReductionReport theorem2_reductions(const PermGroup& G, int m);

/// Both stages plus the count of classes free of reducible orbits.
ReductionReport reduction_report(const PermGroup& G, int m, const std::optional<PermGroup>& N = std::nullopt);

}  // namespace symorb
