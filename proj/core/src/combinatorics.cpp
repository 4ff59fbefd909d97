#include "symorb/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symorb/presets.hpp"

namespace symorb {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " requires n >= 1");
}

// Formula body without the n >= 3 precondition; the necklace evaluation
// needs it at n/2, which can be 2.
BigInt gupta_unchecked(int n, int m) {
  if (m == 0) return 1;
  const int h = m % 2;
  BigInt twice = binomial((n - h) / 2, m / 2);
  BigInt sum = 0;
  const std::int64_t g = std::gcd(n, m);
  for (std::int64_t d : divisors(g)) sum += totient(d) * binomial(n / d - 1, m / d - 1);
  if (sum % m != 0) throw std::logic_error("bracelet formula: necklace term not divisible by m");
  twice += sum / m;
  if (twice % 2 != 0) throw std::logic_error("bracelet formula: total not even");
  return twice / 2;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  require_positive(n, "totient");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::int64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t tau(std::int64_t n) { return static_cast<std::int64_t>(divisors(n).size()); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

CycleType CycleType::of(const Permutation& g) { return {g.cycle_lengths()}; }

int CycleType::degree() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

BigInt fixed_subsets(const CycleType& type, int m) {
  const int n = type.degree();
  if (m < 0 || m > n) return 0;
  // ways[s]: number of ways to pick whole cycles with total length s.
  std::vector<BigInt> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int len : type.lengths)
    for (int s = m; s >= len; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - len)];
  return ways[static_cast<std::size_t>(m)];
}

BigInt fixed_subsets(const Permutation& g, int m) { return fixed_subsets(CycleType::of(g), m); }

BigInt burnside_count(const PermGroup& G, int m) {
  if (m < 0 || m > G.degree())
    throw InvalidArgument("subset size m=" + std::to_string(m) + " outside 0.." + std::to_string(G.degree()));
  BigInt sum = 0;
  for (const auto& g : G.elements()) sum += fixed_subsets(g, m);
  if (sum % G.order() != 0) throw std::logic_error("Cauchy-Frobenius sum not divisible by group order");
  return sum / G.order();
}

BigInt burnside_count_all_subsets(const PermGroup& G) {
  BigInt sum = 0;
  for (const auto& g : G.elements()) sum += BigInt(1) << g.cycle_lengths().size();
  if (sum % G.order() != 0) throw std::logic_error("Cauchy-Frobenius sum not divisible by group order");
  return sum / G.order();
}

BigInt gupta_dihedral_count(int n, int m) {
  if (n < 3) throw InvalidArgument("bracelet count requires n >= 3");
  if (m < 0 || m > n) throw InvalidArgument("bracelet count requires 0 <= m <= n");
  return gupta_unchecked(n, m);
}

ShevelevResult shevelev_cyclic_count(int n, int m) {
  if (n < 3) throw InvalidArgument("necklace count requires n >= 3");
  if (m < 0 || m > n) throw InvalidArgument("necklace count requires 0 <= m <= n");
  ShevelevResult r;
  const int g = std::gcd(n, m);
  for (int d = 1; d <= 2; ++d) {
    if (g % d) continue;
    r.value -= moebius(d) * gupta_unchecked(n / d, m / d);
  }
  r.burnside = burnside_count(cyclic_group(n), m);
  r.consistent = r.value == r.burnside;
  return r;
}

}  // namespace symorb
