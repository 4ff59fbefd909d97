#include <doctest.h>

#include <cmath>

#include "symorb/optimize.hpp"
#include "symorb/presets.hpp"
#include "symorb/suites.hpp"

using namespace symorb;

TEST_CASE("counter-based generator is a pure function of (seed, stream, draw)") {
  CounterRng a(1, 2), b(1, 2), c(1, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  CounterRng r(9, 0);
  double sum = 0, sq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK(u > 0);
    CHECK(u < 1);
    const double z = r.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sq / n - 1) < 0.05);
}

TEST_CASE("option validation") {
  MaxOptions o;
  o.restarts = 0;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = {};
  o.step_init = -1;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
}

TEST_CASE("Bell pairs across a C4 ring") {
  MaxOptions o;
  o.restarts = 4;
  const auto r = maximize(cyclic_group(4), 2, Measure::parse("concurrence"), Subset::of({1, 3}, 4), o);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  const auto chi = is_invariant(r.witness, cyclic_group(4));
  REQUIRE(chi.has_value());
  CHECK(*chi == r.character);
  CHECK(r.sectors.size() == 4);
}

TEST_CASE("pair concurrence of symmetric states is 2/n") {
  // S_n-invariant states: the W state is optimal. For n = 5 most starts fall
  // into a local maximum near the Dicke state with two excitations.
  for (int n = 3; n <= 5; ++n) {
    std::vector<Permutation> gens{parse_cycles("(1 2)", n), cyclic_group(n).generators().front()};
    const PermGroup S = PermGroup::generate(n, gens);
    MaxOptions o;
    o.restarts = 64;
    const auto r = maximize(S, 2, Measure::parse("concurrence"), Subset::of({1, 2}, n), o);
    CHECK(r.value == doctest::Approx(2.0 / n).epsilon(1e-5));
  }
}

TEST_CASE("determinism, threads and monotone restarts") {
  const auto m = Measure::parse("concurrence");
  const Subset x = Subset::of({1, 2}, 5);
  MaxOptions o;
  o.restarts = 3;
  const auto a = maximize(cyclic_group(5), 2, m, x, o);
  const auto b = maximize(cyclic_group(5), 2, m, x, o);
  CHECK(a.value == b.value);
  CHECK(a.witness.amplitudes() == b.witness.amplitudes());
  o.threads = 3;
  const auto c = maximize(cyclic_group(5), 2, m, x, o);
  CHECK(a.value == c.value);
  for (std::size_t s = 0; s < a.sectors.size(); ++s) CHECK(a.sectors[s].restart_values == c.sectors[s].restart_values);
  o.threads = 1;
  o.restarts = 6;
  const auto d = maximize(cyclic_group(5), 2, m, x, o);
  CHECK(d.value >= a.value);
  for (std::size_t s = 0; s < a.sectors.size(); ++s)
    for (std::size_t k = 0; k < a.sectors[s].restart_values.size(); ++k)
      CHECK(a.sectors[s].restart_values[k] == d.sectors[s].restart_values[k]);
}

TEST_CASE("other measures") {
  MaxOptions o;
  o.restarts = 3;
  const auto neg = maximize(cyclic_group(4), 2, Measure::parse("negativity"), Subset::of({1, 3}, 4), o);
  CHECK(neg.value == doctest::Approx(0.5).epsilon(1e-6));
  const auto ent = maximize(cyclic_group(4), 2, Measure::parse("entropy"), Subset::of({1}, 4), o);
  CHECK(ent.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(maximize(cyclic_group(4), 2, Measure::parse("concurrence"), Subset::of({1, 2, 3}, 4), o), InvalidArgument);
}

TEST_CASE("theorem 1 on a small ring") {
  MaxOptions o;
  o.restarts = 4;
  const auto r = verify_theorem1(cyclic_group(5), 2, Measure::parse("concurrence"), 2, o);
  CHECK(r.pass);
  // N(C5) merges the two pair orbits of the pentagon.
  CHECK(r.classes.size() == 1);
  for (const auto& t : r.transports) {
    CHECK(t.error < 1e-12);
    CHECK(t.stays_invariant);
  }
}

TEST_CASE("theorem 2 scenarios and preconditions") {
  MaxOptions o;
  o.restarts = 4;
  const auto s = theorem2_scenario("c4-pair");
  const auto r = verify_theorem2(s.group, s.subgroup, s.block, s.x, 2, Measure::parse("concurrence"), o);
  CHECK(r.pass);
  CHECK(r.rhs.value == doctest::Approx(1.0).epsilon(1e-6));
  const PermGroup D4 = dihedral_group(4);
  const PermGroup refl = PermGroup::generate(4, {parse_cycles("(2 4)", 4)});
  CHECK_THROWS_AS(verify_theorem2(D4, refl, {2, 4}, Subset::of({2, 4}, 4), 2, Measure::parse("concurrence"), o),
                  InvalidArgument);
  CHECK_THROWS_AS(verify_theorem2(s.group, s.subgroup, {1, 2}, Subset::of({1, 2}, 4), 2, Measure::parse("concurrence"), o),
                  InvalidArgument);
  CHECK_THROWS_AS(verify_theorem2(s.group, s.subgroup, {1, 3}, Subset::of({1, 2}, 4), 2, Measure::parse("concurrence"), o),
                  InvalidArgument);
  CHECK_THROWS_AS(theorem2_scenario("nope"), InvalidArgument);
}

TEST_CASE("random sector states") {
  const PermGroup G = preset("T4");
  CounterRng rng(3, 4);
  for (const auto& chi : characters(G)) {
    const SectorBasis b = sector_basis(G, 2, chi);
    if (b.dim() == 0) continue;
    const StateVector v = random_sector_state(b, rng);
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK(*is_invariant(v, G) == chi);
  }
}
