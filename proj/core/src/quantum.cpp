#include "symorb/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symorb {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

void check_local_dim(int d) {
  if (d < 2 || d > kMaxLocalDim) throw InvalidArgument("local dimension d must be in 2.." + std::to_string(kMaxLocalDim));
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

std::size_t state_dimension(int n, int d) {
  if (n < 1) throw InvalidArgument("state needs at least one particle");
  check_local_dim(d);
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > kMaxStateDim) throw ResourceError("state dimension d^n exceeds 2^20");
  }
  return dim;
}

// ---- StateVector ----

StateVector::StateVector(int n, int d, std::vector<Complex> amplitudes) : n_(n), d_(d), amp_(std::move(amplitudes)) {
  if (amp_.size() != state_dimension(n, d)) throw InvalidArgument("amplitude count does not equal d^n");
}

StateVector StateVector::basis(int d, std::span<const int> digits) {
  const int n = static_cast<int>(digits.size());
  std::vector<Complex> amp(state_dimension(n, d), 0.0);
  for (int v : digits)
    if (v < 0 || v >= d) throw InvalidArgument("ket digit out of range 0..d-1");
  amp[index_of(digits, d)] = 1.0;
  return StateVector(n, d, std::move(amp));
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0) throw InvalidArgument("cannot normalize the zero vector");
  std::vector<Complex> out(amp_);
  for (auto& a : out) a /= nrm;
  return StateVector(n_, d_, std::move(out));
}

std::vector<int> digits_of(std::size_t index, int n, int d) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return out;
}

std::size_t index_of(std::span<const int> digits, int d) {
  std::size_t idx = 0;
  for (int v : digits) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return idx;
}

std::vector<std::uint32_t> permutation_index_map(const Permutation& g, int d) {
  const int n = g.degree();
  const std::size_t dim = state_dimension(n, d);
  // Digit at position k moves to position g(k).
  std::vector<std::size_t> weight(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) weight[static_cast<std::size_t>(k)] = ipow(d, n - 1 - g.image0(k));
  std::vector<std::uint32_t> map(dim);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  std::size_t mapped = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    map[i] = static_cast<std::uint32_t>(mapped);
    for (int k = n - 1; k >= 0; --k) {
      auto& dk = digit[static_cast<std::size_t>(k)];
      if (++dk < d) {
        mapped += weight[static_cast<std::size_t>(k)];
        break;
      }
      dk = 0;
      mapped -= static_cast<std::size_t>(d - 1) * weight[static_cast<std::size_t>(k)];
    }
  }
  return map;
}

StateVector permute_state(const Permutation& g, const StateVector& psi) {
  if (g.degree() != psi.n()) throw InvalidArgument("permute_state: degree does not match particle count");
  const auto map = permutation_index_map(g, psi.d());
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) out[map[i]] = psi[i];
  return StateVector(psi.n(), psi.d(), std::move(out));
}

// ---- sectors ----

StateVector SectorBasis::combine(std::span<const Complex> coeffs) const {
  if (coeffs.size() != vectors.size()) throw InvalidArgument("coefficient count does not match sector dimension");
  const int n = group.degree();
  std::vector<Complex> amp(state_dimension(n, d), 0.0);
  for (std::size_t k = 0; k < vectors.size(); ++k)
    for (const auto& [idx, w] : vectors[k].entries) amp[idx] += coeffs[k] * w;
  return StateVector(n, d, std::move(amp));
}

SectorBasis sector_basis(const PermGroup& G, int d, const Character& chi) {
  if (chi.group().elements() != G.elements()) throw InvalidArgument("character belongs to a different group");
  const int n = G.degree();
  const std::size_t dim = state_dimension(n, d);
  const auto N = static_cast<std::int64_t>(G.order());

  std::vector<std::vector<std::uint32_t>> maps;
  std::vector<std::int64_t> gen_turns;
  for (const auto& g : G.generators()) {
    maps.push_back(permutation_index_map(g, d));
    gen_turns.push_back(chi.numerators()[G.index_of(g)]);
  }

  SectorBasis basis;
  basis.group = G;
  basis.d = d;
  basis.character = chi;
  // phase[i] in units of 1/|G| turns; -1 marks unvisited.
  std::vector<std::int64_t> phase(dim, -1);
  std::vector<std::size_t> orbit;
  for (std::size_t start = 0; start < dim; ++start) {
    if (phase[start] >= 0) continue;
    orbit.clear();
    orbit.push_back(start);
    phase[start] = 0;
    bool compatible = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const std::size_t a = orbit[head];
      for (std::size_t j = 0; j < maps.size(); ++j) {
        const std::size_t b = maps[j][a];
        // a_{g(i)} = a_i e^{-i theta_g}
        const std::int64_t want = ((phase[a] - gen_turns[j]) % N + N) % N;
        if (phase[b] < 0) {
          phase[b] = want;
          orbit.push_back(b);
        } else if (phase[b] != want) {
          compatible = false;
        }
      }
    }
    if (!compatible) continue;
    std::sort(orbit.begin(), orbit.end());
    SparseVector v;
    const double scale = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    for (std::size_t idx : orbit)
      v.entries.emplace_back(
          idx, std::polar(scale, 2 * std::numbers::pi * static_cast<double>(phase[idx]) / static_cast<double>(N)));
    basis.vectors.push_back(std::move(v));
    basis.orbit_reps.push_back(digits_of(start, n, d));
  }
  return basis;
}

std::optional<Character> is_invariant(const StateVector& psi, const PermGroup& G, double tol) {
  if (G.degree() != psi.n()) throw InvalidArgument("is_invariant: group degree does not match particle count");
  const double nrm = psi.norm();
  if (nrm == 0) return std::nullopt;
  std::vector<Complex> lambda(G.order());
  for (std::size_t k = 0; k < G.order(); ++k) {
    const auto map = permutation_index_map(G.elements()[k], psi.d());
    Complex overlap = 0;
    for (std::size_t i = 0; i < psi.dim(); ++i) overlap += std::conj(psi[map[i]]) * psi[i];
    // <psi|U_g psi> = sum_i conj(psi[g(i)]) psi[i]
    const Complex l = overlap / (nrm * nrm);
    double resid = 0;
    for (std::size_t i = 0; i < psi.dim(); ++i) resid = std::max(resid, std::abs(psi[i] - l * psi[map[i]]));
    // U_g psi = l psi means psi[i] = l psi[g(i)]
    if (resid > tol * nrm) return std::nullopt;
    lambda[k] = l;
  }
  for (auto& chi : characters(G)) {
    bool match = true;
    for (std::size_t k = 0; k < G.order() && match; ++k) match = std::abs(chi.phase_at(k) - lambda[k]) <= 1e-8;
    if (match) return chi;
  }
  return std::nullopt;
}

// ---- reduced states ----

PartialTracePlan::PartialTracePlan(int n, int d, const Subset& keep) : n_(n), d_(d), keep_(keep) {
  if (keep.empty()) throw InvalidArgument("partial trace needs a nonempty kept set");
  for (int l : keep.labels())
    if (l < 1 || l > n) throw InvalidArgument("partial trace label out of range");
  const std::size_t dim = state_dimension(n, d);
  kept_dim_ = ipow(d, static_cast<int>(keep.size()));
  traced_dim_ = dim / kept_dim_;
  kept_index_.resize(dim);
  traced_index_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto dig = digits_of(i, n, d);
    std::size_t a = 0, b = 0;
    for (int k = 0; k < n; ++k) {
      if (keep.contains(k + 1))
        a = a * static_cast<std::size_t>(d) + static_cast<std::size_t>(dig[static_cast<std::size_t>(k)]);
      else
        b = b * static_cast<std::size_t>(d) + static_cast<std::size_t>(dig[static_cast<std::size_t>(k)]);
    }
    kept_index_[i] = static_cast<std::uint32_t>(a);
    traced_index_[i] = static_cast<std::uint32_t>(b);
  }
}

Eigen::MatrixXcd PartialTracePlan::split(std::span<const Complex> amplitudes) const {
  if (amplitudes.size() != kept_index_.size()) throw InvalidArgument("partial trace: amplitude count mismatch");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(kept_dim_), static_cast<Eigen::Index>(traced_dim_));
  double total = 0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    m(kept_index_[i], traced_index_[i]) = amplitudes[i];
    total += std::norm(amplitudes[i]);
  }
  if (!(total > 0)) throw InvalidArgument("partial trace of the zero vector");
  return m / std::sqrt(total);
}

DensityMatrix PartialTracePlan::apply(std::span<const Complex> amplitudes) const {
  const Eigen::MatrixXcd m = split(amplitudes);
  DensityMatrix rho;
  rho.labels = keep_;
  rho.d = d_;
  rho.matrix = m * m.adjoint();
  return rho;
}

DensityMatrix partial_trace(const StateVector& psi, const Subset& keep) {
  return PartialTracePlan(psi.n(), psi.d(), keep).apply(psi.amplitudes());
}

double wootters_margin(const DensityMatrix& rho) {
  if (rho.d != 2 || rho.labels.size() != 2 || rho.matrix.rows() != 4)
    throw InvalidArgument("concurrence is defined here for two qubits only");
  const Eigen::Matrix4cd r = rho.matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
  Eigen::Vector4d s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Eigen::Matrix4cd flipped = yy * r.conjugate() * yy;
  Eigen::Matrix4cd product = sqrt_rho * flipped * sqrt_rho;
  product = (product + product.adjoint().eval()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(product, Eigen::EigenvaluesOnly);
  Eigen::Vector4d lam = es2.eigenvalues();
  for (int i = 0; i < 4; ++i) lam[i] = lam[i] < -1e-10 ? 0.0 : std::sqrt(std::max(lam[i], 0.0));
  std::sort(lam.data(), lam.data() + 4, std::greater<>());
  return lam[0] - lam[1] - lam[2] - lam[3];
}

double concurrence(const DensityMatrix& rho) { return std::max(0.0, wootters_margin(rho)); }

double pure_wootters_margin(const Eigen::MatrixXcd& m, double smoothing) {
  if (m.rows() != 4) throw InvalidArgument("concurrence is defined here for two qubits only");
  // rho = M M^dag = R^dag R from M^dag = QR, and the Wootters l_i are the
  // singular values of conj(R) YY R^dag. No square roots of small eigenvalues.
  using Tall = Eigen::Matrix<Complex, Eigen::Dynamic, 4>;
  const Eigen::HouseholderQR<Tall> qr(Tall(m.adjoint()));
  const Eigen::Index k = std::min<Eigen::Index>(m.cols(), 4);
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  r.topRows(k) = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Eigen::Matrix4cd t = r.conjugate() * yy * r.adjoint();
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(t).singularValues();
  if (smoothing <= 0) return sv[0] - sv[1] - sv[2] - sv[3];
  auto soft = [smoothing](double v) { return std::sqrt(v * v + smoothing * smoothing) - smoothing; };
  return sv[0] - soft(sv[1]) - soft(sv[2]) - soft(sv[3]);
}

double concurrence(const StateVector& psi, const Subset& x) {
  if (psi.d() != 2 || x.size() != 2) throw InvalidArgument("concurrence is defined here for two qubits only");
  return std::max(0.0, pure_wootters_margin(PartialTracePlan(psi.n(), 2, x).split(psi.amplitudes())));
}

namespace {

Eigen::VectorXd partial_transpose_spectrum(const DensityMatrix& rho, const Subset& part) {
  const auto& labels = rho.labels.labels();
  const int m = static_cast<int>(labels.size());
  std::vector<char> flip(static_cast<std::size_t>(m), 0);
  for (int l : part.labels()) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw InvalidArgument("negativity bipartition label outside the subsystem");
    flip[static_cast<std::size_t>(it - labels.begin())] = 1;
  }
  if (part.empty() || part.size() == labels.size()) throw InvalidArgument("negativity needs a nonempty proper bipartition");
  const auto dim = static_cast<std::size_t>(rho.matrix.rows());
  Eigen::MatrixXcd pt(rho.matrix.rows(), rho.matrix.cols());
  for (std::size_t a = 0; a < dim; ++a) {
    const auto da = digits_of(a, m, rho.d);
    for (std::size_t b = 0; b < dim; ++b) {
      auto ta = da;
      auto tb = digits_of(b, m, rho.d);
      for (int k = 0; k < m; ++k)
        if (flip[static_cast<std::size_t>(k)]) std::swap(ta[static_cast<std::size_t>(k)], tb[static_cast<std::size_t>(k)]);
      pt(static_cast<Eigen::Index>(index_of(ta, rho.d)), static_cast<Eigen::Index>(index_of(tb, rho.d))) =
          rho.matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
  return hermitian_eigenvalues(pt);
}

}  // namespace

double negativity(const DensityMatrix& rho, const Subset& part) {
  const Eigen::VectorXd ev = partial_transpose_spectrum(rho, part);
  double neg = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] < 0) neg -= ev[i];
  return neg;
}

double negativity_margin(const DensityMatrix& rho, const Subset& part) {
  const Eigen::VectorXd ev = partial_transpose_spectrum(rho, part);
  double neg = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] < 0) neg -= ev[i];
  return neg > 0 ? neg : -ev.minCoeff();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix);
  double s = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > 1e-15) s -= ev[i] * std::log2(ev[i]);
  return s;
}

double entropy_of_bipartition(const StateVector& psi, const Subset& x) {
  if (x.empty() || static_cast<int>(x.size()) == psi.n()) return 0.0;
  // The smaller side gives the same spectrum with less work.
  const Subset side = 2 * x.size() <= static_cast<std::size_t>(psi.n()) ? x : x.complement(psi.n());
  return von_neumann_entropy(partial_trace(psi, side));
}

// ---- measures ----

Measure Measure::parse(std::string_view name) {
  Measure m;
  std::string s(name);
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    m.negativity_split = std::stoi(s.substr(colon + 1));
    s = s.substr(0, colon);
  }
  if (s == "concurrence")
    m.kind = MeasureKind::Concurrence;
  else if (s == "negativity")
    m.kind = MeasureKind::Negativity;
  else if (s == "entropy")
    m.kind = MeasureKind::EntropyOfBipartition;
  else
    throw InvalidArgument("unknown measure '" + std::string(name) + "' (concurrence, negativity[:k], entropy)");
  if (m.negativity_split < 1) throw InvalidArgument("negativity split must be >= 1");
  return m;
}

std::string Measure::name() const {
  switch (kind) {
    case MeasureKind::Concurrence: return "concurrence";
    case MeasureKind::Negativity: return "negativity:" + std::to_string(negativity_split);
    case MeasureKind::EntropyOfBipartition: return "entropy";
  }
  return "unknown";
}

void Measure::check_arity(std::size_t m, int d) const {
  switch (kind) {
    case MeasureKind::Concurrence:
      if (m != 2 || d != 2) throw InvalidArgument("concurrence needs |x| = 2 and d = 2");
      break;
    case MeasureKind::Negativity:
      if (static_cast<std::size_t>(negativity_split) >= m) throw InvalidArgument("negativity needs |x| > split");
      break;
    case MeasureKind::EntropyOfBipartition:
      if (m == 0) throw InvalidArgument("entropy needs a nonempty x");
      break;
  }
}

double evaluate(const Measure& measure, const DensityMatrix& rho, const std::optional<Subset>& part) {
  measure.check_arity(rho.labels.size(), rho.d);
  switch (measure.kind) {
    case MeasureKind::Concurrence: return concurrence(rho);
    case MeasureKind::Negativity: {
      if (part) return negativity(rho, *part);
      const auto& l = rho.labels.labels();
      std::vector<int> first(l.begin(), l.begin() + measure.negativity_split);
      return negativity(rho, Subset::of(std::move(first), l.back()));
    }
    case MeasureKind::EntropyOfBipartition: return von_neumann_entropy(rho);
  }
  return 0;
}

double search_objective(const Measure& measure, const DensityMatrix& rho) {
  switch (measure.kind) {
    case MeasureKind::Concurrence: return wootters_margin(rho);
    case MeasureKind::Negativity: {
      const auto& l = rho.labels.labels();
      std::vector<int> first(l.begin(), l.begin() + measure.negativity_split);
      return negativity_margin(rho, Subset::of(std::move(first), l.back()));
    }
    case MeasureKind::EntropyOfBipartition: return von_neumann_entropy(rho);
  }
  return 0;
}

double evaluate(const Measure& measure, const StateVector& psi, const Subset& x) {
  measure.check_arity(x.size(), psi.d());
  if (measure.kind == MeasureKind::EntropyOfBipartition) return entropy_of_bipartition(psi, x);
  if (measure.kind == MeasureKind::Concurrence) return concurrence(psi, x);
  return evaluate(measure, partial_trace(psi, x));
}

// ---- named states ----

StateVector w_state(int n) {
  if (n < 2) throw InvalidArgument("W state needs n >= 2");
  std::vector<Complex> amp(state_dimension(n, 2), 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) amp[std::size_t{1} << (n - 1 - k)] = a;
  return StateVector(n, 2, std::move(amp));
}

StateVector ghz_state(int n, int d) {
  if (n < 2) throw InvalidArgument("GHZ state needs n >= 2");
  std::vector<Complex> amp(state_dimension(n, d), 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int v = 0; v < d; ++v) {
    std::vector<int> digits(static_cast<std::size_t>(n), v);
    amp[index_of(digits, d)] = a;
  }
  return StateVector(n, d, std::move(amp));
}

StateVector bell_state() {
  const double a = 1.0 / std::sqrt(2.0);
  return StateVector(2, 2, {0.0, a, a, 0.0});
}

StateVector singlet_state() {
  const double a = 1.0 / std::sqrt(2.0);
  return StateVector(2, 2, {0.0, a, -a, 0.0});
}

StateVector weave_state(const StateVector& phi, const PointPartition& blocks) {
  const int n = blocks.n;
  const int d = phi.d();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& Y : blocks.blocks) {
    if (static_cast<int>(Y.size()) != phi.n()) throw InvalidArgument("weave: block size differs from the block state");
    for (int l : Y) {
      if (l < 1 || l > n || covered[static_cast<std::size_t>(l - 1)]) throw InvalidArgument("weave: blocks do not partition [n]");
      covered[static_cast<std::size_t>(l - 1)] = 1;
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) throw InvalidArgument("weave: blocks do not cover [n]");

  const std::size_t dim = state_dimension(n, d);
  std::vector<Complex> amp(dim);
  std::vector<int> local(static_cast<std::size_t>(phi.n()));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto dig = digits_of(i, n, d);
    Complex a = 1.0;
    for (const auto& Y : blocks.blocks) {
      for (std::size_t k = 0; k < Y.size(); ++k) local[k] = dig[static_cast<std::size_t>(Y[k] - 1)];
      a *= phi[index_of(local, d)];
      if (a == 0.0) break;
    }
    amp[i] = a;
  }
  return StateVector(n, d, std::move(amp));
}

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd permutation_unitary(const Permutation& h, int d) {
  const auto map = permutation_index_map(h, d);
  const auto dim = static_cast<Eigen::Index>(map.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) u(map[static_cast<std::size_t>(i)], i) = 1.0;
  return u;
}

}  // namespace symorb
