#pragma once

// Maximization of an entanglement measure over the G-invariant states, and
// the numerical checks of the normalizer and normal-subgroup reductions.

#include <cstdint>
#include <optional>
#include <vector>

#include "symorb/orbits.hpp"
#include "symorb/quantum.hpp"

namespace symorb {

/// Counter-based generator: draw k of stream s is a pure function of (seed, s, k).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}
  std::uint64_t next_u64();
  /// Uniform on (0, 1).
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t seed_, stream_, counter_ = 0;
  std::optional<double> spare_;
};

struct MaxOptions {
  int restarts = 32;
  int max_iterations = 2000;
  double convergence_tol = 1e-8;
  std::uint64_t seed = 20240229;
  double step_init = 0.3;
  /// Restarts run on this many threads; results reduce by restart index.
  int threads = 1;

  void validate() const;
};

struct SectorDiagnostics {
  Character character;
  std::size_t dim = 0;
  std::vector<double> restart_values;  // best value of each restart
  std::vector<int> restart_iterations;
  double best = 0;
};

struct MaximizationResult {
  double value = 0;
  StateVector witness;
  Character character;
  Subset x;
  Measure measure;
  std::vector<SectorDiagnostics> sectors;
  std::uint64_t evaluations = 0;
};

/// Best value over every character sector and every restart; a lower bound on the true maximum.
MaximizationResult maximize(const PermGroup& G, int d, const Measure& measure, const Subset& x,
                            const MaxOptions& opts = {});

struct TransportCheck {
  Subset x;
  Permutation nu;
  Subset image;        // nu(x)
  double value = 0;    // measure at x of the witness
  double transported = 0;  // measure at nu(x) of U_nu witness
  double error = 0;
  bool stays_invariant = false;  // U_nu witness is still G-invariant
};

struct Theorem1Class {
  std::vector<std::size_t> orbits;
  std::vector<double> values;
  double spread = 0;
  bool pass = false;
};

struct Theorem1Report {
  PermGroup group;
  int d = 2;
  Measure measure;
  int m = 0;
  ReductionReport reduction;
  std::vector<MaximizationResult> orbit_results;  // one per G-orbit
  std::vector<Theorem1Class> classes;
  std::vector<TransportCheck> transports;
  double tolerance = 1e-3;
  double transport_tolerance = 1e-9;
  bool pass = false;
};

struct Theorem1Options {
  double tolerance = 1e-3;
  double transport_tolerance = 1e-9;
  std::optional<PermGroup> normalizer;
};

Theorem1Report verify_theorem1(const PermGroup& G, int d, const Measure& measure, int m, const MaxOptions& opts = {},
                               const Theorem1Options& t1 = {});

struct Theorem2Report {
  PermGroup group;
  PermGroup subgroup;
  std::vector<int> block;
  Subset x;
  int d = 2;
  Measure measure;
  Restriction restricted;
  MaximizationResult lhs;  // over G-sectors on n particles
  MaximizationResult rhs;  // over (H|Y)-sectors on |Y| particles
  double difference = 0;
  StateVector woven;
  double woven_value = 0;
  double weave_error = 0;
  std::optional<Character> woven_character;
  double commutator_residual = 0;  // max over checked states and h in H|Y
  double tolerance = 1e-3;
  double weave_tolerance = 1e-9;
  double commutator_tolerance = 1e-10;
  bool pass = false;
};

/// Throws InvalidArgument unless H is normal in G, Y is an H-orbit and x lies in Y.
Theorem2Report verify_theorem2(const PermGroup& G, const PermGroup& H, const std::vector<int>& Y, const Subset& x,
                               int d, const Measure& measure, const MaxOptions& opts = {});

/// Random unit vector in a sector, drawn with the given generator.
StateVector random_sector_state(const SectorBasis& basis, CounterRng& rng);

}  // namespace symorb
