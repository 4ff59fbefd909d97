#pragma once

// Pure states of n qudits, permutation action on them, character sectors of
// G-invariant states, reduced density matrices and entanglement measures.
//
// A ket (i_1 ... i_n) with digits in 0..d-1 sits at flat index
// sum_k i_k d^(n-k); label 1 is the most significant digit.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "symorb/group_theory.hpp"
#include "symorb/perm.hpp"

namespace symorb {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxStateDim = std::size_t{1} << 20;
inline constexpr int kMaxLocalDim = 4;

/// Number of amplitudes d^n; throws ResourceError beyond kMaxStateDim.
std::size_t state_dimension(int n, int d);

class StateVector {
 public:
  StateVector() = default;
  /// Amplitudes are taken as given (not normalized).
  StateVector(int n, int d, std::vector<Complex> amplitudes);

  /// |digits>, digits in 0..d-1.
  static StateVector basis(int d, std::span<const int> digits);

  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;
  StateVector normalized() const;

 private:
  int n_ = 0;
  int d_ = 2;
  std::vector<Complex> amp_;
};

std::vector<int> digits_of(std::size_t index, int n, int d);
std::size_t index_of(std::span<const int> digits, int d);

/// Flat-index image table of U_g: out[table[i]] = in[i].
std::vector<std::uint32_t> permutation_index_map(const Permutation& g, int d);

/// U_g psi: the amplitude of ket i moves to ket g(i).
StateVector permute_state(const Permutation& g, const StateVector& psi);

struct SparseVector {
  std::vector<std::pair<std::size_t, Complex>> entries;  // ascending index
};

/// Orthonormal basis of {psi : U_g psi = e^{i theta_g} psi for all g} for one character.
struct SectorBasis {
  PermGroup group;
  int d = 2;
  Character character;
  std::vector<SparseVector> vectors;
  std::vector<std::vector<int>> orbit_reps;  // least ket of each contributing orbit

  std::size_t dim() const { return vectors.size(); }
  /// sum_k coeffs[k] * vectors[k] (unnormalized).
  StateVector combine(std::span<const Complex> coeffs) const;
};

SectorBasis sector_basis(const PermGroup& G, int d, const Character& chi);

/// The character chi with U_g psi = chi(g) psi for every g in G, if any.
std::optional<Character> is_invariant(const StateVector& psi, const PermGroup& G, double tol = 1e-10);

struct DensityMatrix {
  Subset labels;  // subsystem order = ascending labels
  int d = 2;
  Eigen::MatrixXcd matrix;
};

/// Precomputed index split for repeated reductions onto the same labels.
class PartialTracePlan {
 public:
  PartialTracePlan(int n, int d, const Subset& keep);
  DensityMatrix apply(std::span<const Complex> amplitudes) const;
  /// M with rho = M M^dag: rows index kept digits, columns traced digits; unit Frobenius norm.
  Eigen::MatrixXcd split(std::span<const Complex> amplitudes) const;
  const Subset& keep() const { return keep_; }

 private:
  int n_, d_;
  Subset keep_;
  std::size_t kept_dim_, traced_dim_;
  std::vector<std::uint32_t> kept_index_, traced_index_;
};

DensityMatrix partial_trace(const StateVector& psi, const Subset& keep);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);
/// l1 - l2 - l3 - l4 before clamping at zero; concurrence where positive.
double wootters_margin(const DensityMatrix& rho);
/// The same margin for rho = M M^dag computed from the factor M; stable near rank deficiency.
/// A positive smoothing replaces l_i (i > 1) by sqrt(l_i^2 + s^2) - s, which rounds the
/// kink where l_i reaches zero.
double pure_wootters_margin(const Eigen::MatrixXcd& m, double smoothing = 0.0);
/// Concurrence of rho_x for a pure n-qubit state, via the factor of rho_x.
double concurrence(const StateVector& psi, const Subset& x);
/// Sum of |negative eigenvalues| of the partial transpose over `part` (labels within rho.labels).
double negativity(const DensityMatrix& rho, const Subset& part);
/// Negativity when positive, otherwise minus the least eigenvalue of the partial transpose.
double negativity_margin(const DensityMatrix& rho, const Subset& part);
/// Base-2 von Neumann entropy.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_bipartition(const StateVector& psi, const Subset& x);

enum class MeasureKind { Concurrence, Negativity, EntropyOfBipartition };

struct Measure {
  MeasureKind kind = MeasureKind::Concurrence;
  /// Negativity transposes the first `negativity_split` labels of x.
  int negativity_split = 1;

  /// "concurrence", "negativity", "entropy"
  static Measure parse(std::string_view name);
  std::string name() const;
  /// Throws InvalidArgument if the measure cannot be evaluated on |x| parties of dimension d.
  void check_arity(std::size_t m, int d) const;
};

/// The measure on rho_x; `part` overrides the negativity bipartition.
double evaluate(const Measure& measure, const DensityMatrix& rho, const std::optional<Subset>& part = std::nullopt);
double evaluate(const Measure& measure, const StateVector& psi, const Subset& x);
/// Continuous extension of the measure below zero, used to climb out of separable regions.
/// Agrees with evaluate() wherever that is positive.
double search_objective(const Measure& measure, const DensityMatrix& rho);

/// (1/sqrt n) sum of single-excitation kets.
StateVector w_state(int n);
StateVector ghz_state(int n, int d = 2);
/// (|01> + |10>)/sqrt 2
StateVector bell_state();
/// (|01> - |10>)/sqrt 2
StateVector singlet_state();

/// A copy of phi on every block; block-local particle k is the k-th smallest label.
StateVector weave_state(const StateVector& phi, const PointPartition& blocks);

/// Largest |entry| of A*B - B*A.
double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
/// d^|Y| x d^|Y| matrix of U_h for a permutation of the local labels.
Eigen::MatrixXcd permutation_unitary(const Permutation& h, int d);

}  // namespace symorb
