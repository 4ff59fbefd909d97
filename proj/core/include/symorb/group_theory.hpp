#pragma once

// Structural computations on finite permutation groups: conjugacy classes,
// normal subgroups, the normalizer in S_n, point orbits, restriction of an
// action to an invariant label set, and one-dimensional characters.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symorb/perm.hpp"

namespace symorb {

/// Exact rational number of turns, num/den in lowest terms with 0 <= num < den.
struct Turns {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Turns&, const Turns&) = default;
};

/// A homomorphism G -> U(1), stored exactly as numerators k of k/|G| turns,
/// aligned with group.elements().
class Character {
 public:
  Character() = default;
  Character(PermGroup group, std::vector<std::int64_t> numerators);

  const PermGroup& group() const { return group_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }

  Turns turns(const Permutation& g) const;
  Turns turns_at(std::size_t element_index) const;
  /// exp(2 pi i * turns(g))
  std::complex<double> phase(const Permutation& g) const;
  std::complex<double> phase_at(std::size_t element_index) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) { return a.num_ == b.num_; }

 private:
  PermGroup group_;
  std::vector<std::int64_t> num_;
};

struct PointPartition {
  int n = 0;
  /// Each block ascending; blocks ordered by their least label.
  std::vector<std::vector<int>> blocks;

  /// Index of the block holding `label`.
  std::size_t block_of(int label) const;
  bool equal_sizes() const;
};

/// H|Y on local labels 1..|Y|; local label k corresponds to global label labels[k-1].
struct Restriction {
  PermGroup group;
  std::vector<int> labels;

  int to_global(int local) const { return labels[static_cast<std::size_t>(local - 1)]; }
  /// Throws InvalidArgument when `global` is not in the restricted set.
  int to_local(int global) const;
  Subset to_local(const Subset& x) const;
};

struct NormalizerOptions {
  /// Backtracking nodes visited before giving up with ResourceError.
  std::uint64_t node_budget = 20'000'000;
  /// Degree limit for the search.
  int max_degree = 16;
};

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& G);

bool is_subgroup(const PermGroup& G, const PermGroup& H);
/// H is a subgroup of G and g h g^-1 lies in H for all g in G, h in H.
bool is_normal(const PermGroup& G, const PermGroup& H);
bool is_abelian(const PermGroup& G);

/// All normal subgroups including the trivial group and G, sorted by order
/// and then by element list.
std::vector<PermGroup> normal_subgroups(const PermGroup& G);

/// Subgroup generated by all commutators.
PermGroup derived_subgroup(const PermGroup& G);

/// {v in S_n : v G v^-1 = G}, found by backtracking over point images.
PermGroup normalizer(const PermGroup& G, const NormalizerOptions& opts = {});

/// Least v in N (lexicographic) with act_subset(v, x1) in the G-orbit of x2.
std::optional<Permutation> find_normalizer_witness(const PermGroup& G, const PermGroup& N, const Subset& x1,
                                                   const Subset& x2);
std::optional<Permutation> find_normalizer_witness(const PermGroup& G, const Subset& x1, const Subset& x2);

PointPartition point_orbits(const PermGroup& H);

/// Throws InvalidArgument unless Y is a union of H-orbits.
Restriction restrict_to(const PermGroup& H, std::span<const int> Y);

/// All one-dimensional characters; the trivial character comes first.
std::vector<Character> characters(const PermGroup& G);

}  // namespace symorb
