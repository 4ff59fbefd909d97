#pragma once

// Exact counting of subset orbits: Cauchy-Frobenius over a group, and the
// closed-form bracelet (dihedral) and necklace (cyclic) counts.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symorb/perm.hpp"

namespace symorb {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t totient(std::int64_t n);
int moebius(std::int64_t n);
/// Ascending.
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t tau(std::int64_t n);

/// 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

struct CycleType {
  std::vector<int> lengths;  // descending

  static CycleType of(const Permutation& g);
  int degree() const;
};

/// m-subsets fixed setwise by g: sub-multisets of cycle lengths summing to m.
BigInt fixed_subsets(const CycleType& type, int m);
BigInt fixed_subsets(const Permutation& g, int m);

/// |X_m / G|. Throws std::logic_error if the Cauchy-Frobenius sum is not divisible by |G|.
BigInt burnside_count(const PermGroup& G, int m);
/// Orbits of G on all subsets of [n] (every size at once).
BigInt burnside_count_all_subsets(const PermGroup& G);

/// Closed-form count of m-subsets of an n-ring up to rotation and reflection.
BigInt gupta_dihedral_count(int n, int m);

struct ShevelevResult {
  BigInt value;     // the closed form evaluated as written
  BigInt burnside;  // |X_m / C_n| by Cauchy-Frobenius, authoritative
  bool consistent = false;
};

/// Evaluates -sum_{d <= 2, d | (n,m)} mu(d) |X_{m/d} / D_{n/d}| alongside the
/// Burnside count over C_n.
ShevelevResult shevelev_cyclic_count(int n, int m);

}  // namespace symorb
