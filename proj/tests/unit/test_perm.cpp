#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symorb/perm.hpp"
#include "symorb/presets.hpp"

using namespace symorb;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto p = random_perm(n, rng), q = random_perm(n, rng);
    CHECK(oracle::img(p * q) == oracle::mul(oracle::img(p), oracle::img(q)));
    CHECK((p * p.inverse()).is_identity());
    CHECK(oracle::img(conjugate(p, q)) ==
          oracle::mul(oracle::mul(oracle::img(p), oracle::img(q)), oracle::inv(oracle::img(p))));
  }
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(parse_cycles("(1 2 3)(4 5)").order() == 6);
  CHECK(Permutation::identity(5).order() == 1);
  CHECK(parse_cycles("(1 2 3 4)(5 6)", 8).cycle_lengths() == std::vector<int>{4, 2, 1, 1});
}

TEST_CASE("cycle notation round trip") {
  const auto p = parse_cycles("(2 8 6 11)(3 10 5 9)(4 7)", 12);
  CHECK(p.degree() == 12);
  CHECK(p(2) == 8);
  CHECK(p(11) == 2);
  CHECK(p(1) == 1);
  CHECK(to_cycle_string(p) == "(2 8 6 11)(3 10 5 9)(4 7)");
  CHECK(parse_cycles(to_cycle_string(p), 12) == p);
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(parse_cycles("(1,3)(2,4)") == parse_cycles("(1 3)(2 4)"));
  CHECK(parse_cycles("(1 2)", 2).degree() == 2);
}

TEST_CASE("cycle parse errors carry a position") {
  CHECK_THROWS_AS(parse_cycles("(1 2"), InvalidArgument);
  CHECK_THROWS_AS(parse_cycles("(1 1)"), InvalidArgument);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), InvalidArgument);
  CHECK_THROWS_AS(parse_cycles("(0 2)"), InvalidArgument);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 4), InvalidArgument);
  CHECK_THROWS_AS(parse_cycles("(1 x)"), InvalidArgument);
  try {
    parse_cycles("(1 2)(3 q)");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images(std::vector<int>{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images(std::vector<int>{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images(std::vector<int>{1, 3}), InvalidArgument);
}

TEST_CASE("tuple action moves entry i to position g(i)") {
  const auto g = parse_cycles("(1 2 3)");
  const std::vector<char> t{'a', 'b', 'c'};
  const auto u = act_tuple(g, t);
  CHECK(u == std::vector<char>{'c', 'a', 'b'});
  // Homomorphism: (gh).t = g.(h.t)
  std::mt19937 rng(3);
  const std::vector<int> s{10, 20, 30, 40, 50, 60};
  for (int k = 0; k < 50; ++k) {
    const auto a = random_perm(6, rng), b = random_perm(6, rng);
    CHECK(act_tuple(a * b, s) == act_tuple(a, act_tuple(b, s)));
  }
}

TEST_CASE("subset action and masks") {
  const auto g = parse_cycles("(1 2 3 4 5 6 7 8)");
  const Subset x = parse_subset("1,3", 8);
  CHECK(to_string(act_subset(g, x)) == "{2,4}");
  CHECK(act_mask(g, x.mask()) == act_subset(g, x).mask());
  CHECK(Subset::from_mask(x.mask()) == x);
  CHECK(to_string(x.complement(4)) == "{2,4}");
  CHECK_THROWS_AS(parse_subset("1,1", 8), InvalidArgument);
  CHECK_THROWS_AS(parse_subset("1,9", 8), InvalidArgument);
  CHECK_THROWS_AS(parse_subset("1,a", 8), InvalidArgument);
}

TEST_CASE("group closure matches a naive closure") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    std::vector<Permutation> gens{random_perm(n, rng)};
    if (trial % 2) gens.push_back(random_perm(n, rng));
    const auto G = PermGroup::generate(n, gens);
    std::vector<oracle::Img> og;
    for (const auto& g : gens) og.push_back(oracle::img(g));
    CHECK(oracle::elements(G) == oracle::closure(og, n));
    CHECK(G.elements().front().is_identity());
    CHECK(std::is_sorted(G.elements().begin(), G.elements().end()));
    for (const auto& g : G.elements()) CHECK(G.elements()[G.index_of(g)] == g);
  }
}

TEST_CASE("from_elements keeps the element set") {
  const auto G = dihedral_group(7);
  const auto H = PermGroup::from_elements(7, G.elements());
  CHECK(H.elements() == G.elements());
  CHECK(PermGroup::generate(7, H.generators()).order() == 14);
}

TEST_CASE("element cap raises a resource error") {
  std::vector<Permutation> gens{parse_cycles("(1 2)", 10), parse_cycles("(1 2 3 4 5 6 7 8 9 10)")};
  CHECK_THROWS_AS(PermGroup::generate(10, gens, 1000), ResourceError);
}

TEST_CASE("transitivity") {
  CHECK(cyclic_group(5).is_transitive());
  CHECK_FALSE(PermGroup::generate(4, {parse_cycles("(1 2)", 4)}).is_transitive());
}
