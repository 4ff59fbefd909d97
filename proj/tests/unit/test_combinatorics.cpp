#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symorb/combinatorics.hpp"
#include "symorb/presets.hpp"

using namespace symorb;

namespace {

int brute_moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t brute_fixed(const Permutation& g, int m) {
  const int n = g.degree();
  std::uint64_t c = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (std::popcount(mask) == m && act_mask(g, mask) == mask) ++c;
  return c;
}

}  // namespace

TEST_CASE("number theory helpers") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(totient(n) == oracle::gcd_totient(n));
    CHECK(moebius(n) == brute_moebius(n));
    std::vector<std::int64_t> divs;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    CHECK(divisors(n) == divs);
    CHECK(tau(n) == static_cast<std::int64_t>(divs.size()));
  }
  CHECK(tau(8) == 4);
}

TEST_CASE("binomials") {
  for (int n = 0; n <= 40; ++n)
    for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("fixed subsets count by cycle type") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 11;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto g = Permutation::from_images(v);
    for (int m = 0; m <= n; ++m) CHECK(fixed_subsets(g, m) == brute_fixed(g, m));
  }
}

TEST_CASE("burnside equals explicit orbit counts") {
  std::vector<PermGroup> gs{cyclic_group(8), dihedral_group(7), preset("T4"), preset("O6"), preset("O8", true)};
  for (const auto& G : gs) {
    for (int m = 0; m <= G.degree(); ++m) {
      CAPTURE(G.name());
      CAPTURE(m);
      CHECK(burnside_count(G, m) == oracle::subset_orbits(oracle::elements(G), G.degree(), m).size());
    }
  }
  // Pair, triple and quadruple necklace counts for n = 8: 4, 7, 10.
  CHECK(burnside_count(cyclic_group(8), 2) == 4);
  CHECK(burnside_count(cyclic_group(8), 3) == 7);
  CHECK(burnside_count(cyclic_group(8), 4) == 10);
  CHECK(burnside_count(cyclic_group(8), 0) == 1);
  CHECK(burnside_count(cyclic_group(8), 8) == 1);
}

TEST_CASE("orbits of all subsets") {
  // 2-colour necklaces of length 6: 14; bracelets: 13.
  CHECK(burnside_count_all_subsets(cyclic_group(6)) == 14);
  CHECK(burnside_count_all_subsets(dihedral_group(6)) == 13);
}

TEST_CASE("bracelet formula") {
  for (int n = 3; n <= 16; ++n)
    for (int m = 0; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(gupta_dihedral_count(n, m) == burnside_count(dihedral_group(n), m));
    }
  CHECK(gupta_dihedral_count(8, 3) == 5);
  CHECK_THROWS_AS(gupta_dihedral_count(2, 1), InvalidArgument);
}

TEST_CASE("necklace closed form is evaluated as written") {
  const ShevelevResult r = shevelev_cyclic_count(8, 2);
  CHECK(r.value == -3);
  CHECK(r.burnside == 4);
  CHECK_FALSE(r.consistent);
}

TEST_CASE("complement symmetry") {
  for (int n = 3; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) CHECK(burnside_count(cyclic_group(n), m) == burnside_count(cyclic_group(n), n - m));
}
