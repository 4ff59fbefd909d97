#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "symorb/presets.hpp"
#include "symorb/quantum.hpp"

using namespace symorb;

namespace {

std::vector<Complex> random_amps(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> nd;
  std::vector<Complex> a(dim);
  for (auto& z : a) z = Complex(nd(rng), nd(rng));
  return a;
}

StateVector random_state(int n, int d, std::mt19937& rng) {
  return StateVector(n, d, random_amps(static_cast<std::size_t>(std::pow(d, n)), rng)).normalized();
}

// Big-endian digit tuple of an index.
std::vector<int> digits(std::size_t i, int n, int d) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(i % static_cast<std::size_t>(d));
    i /= static_cast<std::size_t>(d);
  }
  return t;
}

std::size_t index(const std::vector<int>& t, int d) {
  std::size_t i = 0;
  for (int v : t) i = i * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return i;
}

// rho_x by an explicit double loop over basis kets.
Eigen::MatrixXcd naive_reduced(const StateVector& psi, const Subset& x) {
  const int n = psi.n(), d = psi.d();
  const auto kdim = static_cast<Eigen::Index>(std::pow(d, x.size()));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kdim, kdim);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = 0; j < psi.dim(); ++j) {
      const auto ti = digits(i, n, d), tj = digits(j, n, d);
      bool same_rest = true;
      std::vector<int> ki, kj;
      for (int l = 1; l <= n; ++l) {
        if (x.contains(l)) {
          ki.push_back(ti[static_cast<std::size_t>(l - 1)]);
          kj.push_back(tj[static_cast<std::size_t>(l - 1)]);
        } else if (ti[static_cast<std::size_t>(l - 1)] != tj[static_cast<std::size_t>(l - 1)]) {
          same_rest = false;
        }
      }
      if (same_rest)
        rho(static_cast<Eigen::Index>(index(ki, d)), static_cast<Eigen::Index>(index(kj, d))) += psi[i] * std::conj(psi[j]);
    }
  return rho;
}

// Concurrence from the non-Hermitian product rho * flipped(rho).
double naive_concurrence(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Eigen::Matrix4cd r = rho * (yy * rho.conjugate() * yy);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
  std::vector<double> lam;
  for (int i = 0; i < 4; ++i) lam.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[i].real())));
  std::sort(lam.rbegin(), lam.rend());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

DensityMatrix dm(const Subset& labels, const Eigen::MatrixXcd& m) {
  DensityMatrix r;
  r.labels = labels;
  r.d = 2;
  r.matrix = m;
  return r;
}

}  // namespace

TEST_CASE("index convention: label 1 is the most significant digit") {
  CHECK(index_of(std::vector<int>{1, 0, 0}, 2) == 4);
  CHECK(digits_of(4, 3, 2) == std::vector<int>{1, 0, 0});
  CHECK(digits_of(5, 2, 3) == std::vector<int>{1, 2});
  CHECK(StateVector::basis(2, std::vector<int>{0, 1})[1] == Complex(1, 0));
  CHECK_THROWS_AS(state_dimension(21, 2), ResourceError);
  CHECK_THROWS_AS(StateVector(2, 2, std::vector<Complex>(3)), InvalidArgument);
}

TEST_CASE("permuting a state moves the digit at i to position g(i)") {
  std::mt19937 rng(2);
  const auto g = parse_cycles("(1 2 3)(4 5)", 5);
  for (int d : {2, 3}) {
    const StateVector psi = random_state(5, d, rng);
    const StateVector out = permute_state(g, psi);
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      const auto t = digits(i, 5, d);
      CHECK(std::abs(out[index(act_tuple(g, t), d)] - psi[i]) < 1e-15);
    }
  }
  const auto map = permutation_index_map(g, 2);
  CHECK(map.size() == 32);
}

TEST_CASE("partial trace agrees with the explicit sum") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = trial % 3 == 0 ? 3 : 2;
    const StateVector psi = random_state(4, d, rng);
    for (const auto& x : {Subset::of({1, 3}, 4), Subset::of({2}, 4), Subset::of({1, 2, 4}, 4)}) {
      const DensityMatrix rho = partial_trace(psi, x);
      CHECK((rho.matrix - naive_reduced(psi, x)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(std::abs(rho.matrix.trace() - Complex(1, 0)) < 1e-13);
    }
  }
}

TEST_CASE("concurrence of known states") {
  const Subset x = Subset::of({1, 2}, 2);
  CHECK(concurrence(partial_trace(bell_state(), x)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(partial_trace(singlet_state(), x)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(partial_trace(StateVector::basis(2, std::vector<int>{0, 1}), x)) == doctest::Approx(0.0));
  // Pure two-qubit state: 2 |ad - bc|.
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const StateVector psi = random_state(2, 2, rng);
    const double want = 2 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    CHECK(std::abs(concurrence(psi, x) - want) < 1e-12);
    CHECK(std::abs(concurrence(partial_trace(psi, x)) - want) < 1e-7);
  }
  // Werner states p |singlet><singlet| + (1-p) I/4: max(0, (3p-1)/2).
  const Eigen::Vector4cd s(0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0);
  for (double p : {0.0, 0.2, 1.0 / 3, 0.5, 0.8, 1.0}) {
    const Eigen::MatrixXcd w = p * s * s.adjoint() + (1 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    CHECK(concurrence(dm(x, w)) == doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-10));
  }
}

TEST_CASE("mixed-state concurrence agrees with the non-Hermitian formula and the factored form") {
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) {
    const StateVector psi = random_state(4, 2, rng);
    const Subset x = Subset::of({1 + k % 3, 4}, 4);
    const DensityMatrix rho = partial_trace(psi, x);
    const double stable = concurrence(psi, x);
    CHECK(std::abs(concurrence(rho) - naive_concurrence(rho.matrix)) < 1e-6);
    CHECK(std::abs(stable - concurrence(rho)) < 1e-6);
    CHECK(std::abs(std::max(0.0, pure_wootters_margin(PartialTracePlan(4, 2, x).split(psi.amplitudes()))) - stable) < 1e-14);
    if (wootters_margin(rho) > 1e-6) CHECK(search_objective(Measure::parse("concurrence"), rho) == doctest::Approx(concurrence(rho)));
  }
}

TEST_CASE("concurrence is convex on mixtures") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0, 1);
  const Subset x = Subset::of({1, 2}, 2);
  for (int k = 0; k < 100; ++k) {
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(4, 4);
    double bound = 0, total = 0;
    std::vector<double> w(3);
    for (auto& v : w) total += (v = u(rng));
    for (double v : w) {
      const StateVector phi = random_state(2, 2, rng);
      const Eigen::Map<const Eigen::Vector4cd> a(phi.amplitudes().data());
      mix += (v / total) * a * a.adjoint();
      bound += (v / total) * concurrence(phi, x);
    }
    CHECK(concurrence(dm(x, mix)) <= bound + 1e-9);
  }
}

TEST_CASE("negativity and entropy") {
  const Subset x = Subset::of({1, 2}, 2);
  const Subset first = Subset::of({1}, 2);
  CHECK(negativity(partial_trace(bell_state(), x), first) == doctest::Approx(0.5));
  CHECK(negativity(partial_trace(StateVector::basis(2, std::vector<int>{1, 0}), x), first) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(partial_trace(bell_state(), first)) == doctest::Approx(1.0));
  CHECK(entropy_of_bipartition(ghz_state(5), Subset::of({2, 4}, 5)) == doctest::Approx(1.0));
  CHECK(entropy_of_bipartition(ghz_state(3, 3), Subset::of({1}, 3)) == doctest::Approx(std::log2(3.0)));
  std::mt19937 rng(21);
  const StateVector psi = random_state(5, 2, rng);
  const Subset y = Subset::of({1, 4}, 5);
  CHECK(entropy_of_bipartition(psi, y) == doctest::Approx(entropy_of_bipartition(psi, y.complement(5))).epsilon(1e-10));
  // Pure two-qubit states: negativity = |ad - bc|, half the concurrence.
  for (int k = 0; k < 20; ++k) {
    const StateVector phi = random_state(2, 2, rng);
    CHECK(negativity(partial_trace(phi, x), first) == doctest::Approx(concurrence(phi, x) / 2).epsilon(1e-9));
  }
  // Margin goes negative on separable states and equals the negativity otherwise.
  const auto sep = partial_trace(StateVector::basis(2, std::vector<int>{0, 0}), x);
  CHECK(negativity_margin(sep, first) <= 0);
  CHECK(negativity_margin(partial_trace(bell_state(), x), first) == doctest::Approx(0.5));
}

TEST_CASE("measure parsing and arity") {
  CHECK(Measure::parse("negativity:2").negativity_split == 2);
  CHECK(Measure::parse("entropy").kind == MeasureKind::EntropyOfBipartition);
  CHECK_THROWS_AS(Measure::parse("fidelity"), InvalidArgument);
  CHECK_THROWS_AS(Measure::parse("concurrence").check_arity(3, 2), InvalidArgument);
  CHECK_THROWS_AS(Measure::parse("concurrence").check_arity(2, 3), InvalidArgument);
  CHECK_THROWS_AS(Measure::parse("negativity:2").check_arity(2, 2), InvalidArgument);
}

TEST_CASE("W states have pair concurrence 2/n") {
  for (int n = 2; n <= 8; ++n) {
    const StateVector w = w_state(n);
    for (int j = 2; j <= n; ++j) CHECK(std::abs(concurrence(w, Subset::of({1, j}, n)) - 2.0 / n) < 1e-12);
  }
}

TEST_CASE("sector bases are orthonormal eigenvectors of every U_g") {
  for (const char* name : {"C6", "D5", "T4", "O6"}) {
    const PermGroup G = preset(name);
    std::size_t total = 0;
    for (const auto& chi : characters(G)) {
      const SectorBasis b = sector_basis(G, 2, chi);
      total += b.dim();
      for (std::size_t k = 0; k < b.dim(); ++k) {
        std::vector<Complex> c(b.dim());
        c[k] = 1;
        const StateVector v = b.combine(c);
        CHECK(v.norm() == doctest::Approx(1.0));
        for (std::size_t e = 0; e < G.order(); ++e) {
          const StateVector u = permute_state(G.elements()[e], v);
          double r = 0;
          for (std::size_t i = 0; i < v.dim(); ++i) r = std::max(r, std::abs(u[i] - chi.phase_at(e) * v[i]));
          CHECK(r < 1e-13);
        }
        for (std::size_t l = k + 1; l < b.dim(); ++l) {
          std::vector<Complex> c2(b.dim());
          c2[l] = 1;
          const StateVector w = b.combine(c2);
          Complex ip = 0;
          for (std::size_t i = 0; i < v.dim(); ++i) ip += std::conj(v[i]) * w[i];
          CHECK(std::abs(ip) < 1e-13);
        }
      }
    }
    // For abelian G every irrep is one-dimensional, so the sectors fill the space.
    if (is_abelian(G)) CHECK(total == std::size_t{1} << G.degree());
  }
}

TEST_CASE("invariance detection") {
  std::mt19937 rng(17);
  const PermGroup G = cyclic_group(5);
  const auto chars = characters(G);
  for (const auto& chi : chars) {
    const SectorBasis b = sector_basis(G, 2, chi);
    const StateVector v = b.combine(random_amps(b.dim(), rng)).normalized();
    const auto got = is_invariant(v, G);
    REQUIRE(got.has_value());
    CHECK(*got == chi);
  }
  CHECK_FALSE(is_invariant(random_state(5, 2, rng), G).has_value());
  CHECK(is_invariant(w_state(5), G)->is_trivial());
}

TEST_CASE("weaving copies a block state onto every block") {
  PointPartition tetra;
  tetra.n = 8;
  tetra.blocks = {{1, 3, 6, 8}, {2, 4, 5, 7}};
  const StateVector psi = weave_state(w_state(4), tetra);
  const auto chi = is_invariant(psi, preset("O8"));
  REQUIRE(chi.has_value());
  CHECK(chi->is_trivial());
  CHECK(concurrence(psi, Subset::of({1, 3}, 8)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(concurrence(psi, Subset::of({2, 7}, 8)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(concurrence(psi, Subset::of({1, 2}, 8)) == doctest::Approx(0.0));
  PointPartition bad;
  bad.n = 4;
  bad.blocks = {{1, 2}, {2, 3}};
  CHECK_THROWS_AS(weave_state(bell_state(), bad), InvalidArgument);
}

TEST_CASE("permutation unitaries and commutators") {
  const Eigen::MatrixXcd swap = permutation_unitary(parse_cycles("(1 2)"), 2);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want(0, 0) = want(3, 3) = want(1, 2) = want(2, 1) = 1;
  CHECK((swap - want).cwiseAbs().maxCoeff() == 0);
  const Eigen::MatrixXcd rho = partial_trace(bell_state(), Subset::of({1, 2}, 2)).matrix;
  CHECK(commutator_norm(rho, swap) < 1e-15);
  const Eigen::MatrixXcd prod = partial_trace(StateVector::basis(2, std::vector<int>{0, 1}), Subset::of({1, 2}, 2)).matrix;
  CHECK(commutator_norm(prod, swap) > 0.5);
}
