#include "symorb/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numbers>
#include <thread>

namespace symorb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  return splitmix64(seed_ ^ splitmix64(stream_ ^ splitmix64(counter_++)));
}

double CounterRng::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  return r * std::cos(t);
}

void MaxOptions::validate() const {
  if (restarts < 1 || max_iterations < 1 || threads < 1) throw InvalidArgument("optimizer counts must be positive");
  if (!(convergence_tol > 0) || !(step_init > 0)) throw InvalidArgument("optimizer tolerances must be positive");
}

StateVector random_sector_state(const SectorBasis& basis, CounterRng& rng) {
  if (basis.dim() == 0) throw InvalidArgument("cannot draw from an empty sector");
  std::vector<Complex> c(basis.dim());
  for (auto& v : c) v = Complex(rng.normal(), rng.normal());
  return basis.combine(c).normalized();
}

namespace {

struct RestartOutcome {
  double value = -1;
  std::vector<Complex> amplitudes;
  int iterations = 0;
  std::uint64_t evaluations = 0;
};

// Later restarts and sectors must win by more than roundoff to replace the
// incumbent, so adding restarts never lowers the re-evaluated result.
constexpr double kTieTolerance = 1e-12;

constexpr int kStallWindow = 50;
constexpr double kStallGain = 1e-10;

constexpr int kLbfgsIterations = 500;
constexpr std::size_t kLbfgsMemory = 8;

class SectorSearch {
 public:
  SectorSearch(const SectorBasis& basis, const Measure& measure, const Subset& x, const MaxOptions& opts)
      : basis_(basis), measure_(measure), plan_(basis.group.degree(), basis.d, x), opts_(opts) {}

  double evaluate(const std::vector<Complex>& amps, std::uint64_t& count, double smoothing = 0) const {
    ++count;
    if (measure_.kind == MeasureKind::Concurrence) return pure_wootters_margin(plan_.split(amps), smoothing);
    return search_objective(measure_, plan_.apply(amps));
  }

  // One restart. Concurrence first climbs smoothed margins by L-BFGS; every
  // measure then finishes with an adaptive coordinate search on the exact value.
  RestartOutcome run(CounterRng rng) const {
    const std::size_t nparam = 2 * basis_.dim();
    std::vector<double> p(nparam);
    for (auto& v : p) v = rng.normal();
    normalize(p);

    RestartOutcome out;
    double step0 = opts_.step_init;
    if (measure_.kind == MeasureKind::Concurrence) {
      // The margin has sharp ridges where small l_i vanish.
      for (const double eps : {1e-2, 1e-4}) climb_smoothed(p, eps, out);
      step0 = 1e-3;
    }
    std::vector<Complex> amps = build(p);
    const double f = coordinate_search(p, amps, step0, out);
    out.value = std::max(f, 0.0);
    out.amplitudes = std::move(amps);
    return out;
  }

 private:
  static void normalize(std::vector<double>& p) {
    double s = 0;
    for (double v : p) s += v * v;
    s = std::sqrt(s);
    for (auto& v : p) v /= s;
  }

  void shift(std::vector<Complex>& amps, std::size_t j, double by) const {
    const Complex delta = (j % 2 == 0) ? Complex(by, 0) : Complex(0, by);
    for (const auto& [idx, w] : basis_.vectors[j / 2].entries) amps[idx] += delta * w;
  }

  double coordinate_search(std::vector<double>& p, std::vector<Complex>& amps, double step0, RestartOutcome& out) const {
    const std::size_t nparam = p.size();
    std::vector<double> step(nparam, step0);
    double f = evaluate(amps, out.evaluations);
    double window_start = f;
    for (int sweep = 0; out.iterations < opts_.max_iterations; ++sweep) {
      if (*std::max_element(step.begin(), step.end()) < opts_.convergence_tol) break;
      // Creeping gains are not worth the sweeps.
      if (sweep > 0 && sweep % kStallWindow == 0) {
        if (f - window_start < kStallGain) break;
        window_start = f;
      }
      ++out.iterations;
      for (std::size_t j = 0; j < nparam; ++j) {
        if (step[j] < opts_.convergence_tol) continue;
        bool accepted = false;
        for (double sign : {1.0, -1.0}) {
          shift(amps, j, sign * step[j]);
          const double trial = evaluate(amps, out.evaluations);
          if (trial > f) {
            f = trial;
            p[j] += sign * step[j];
            accepted = true;
            break;
          }
          shift(amps, j, -sign * step[j]);
        }
        step[j] = accepted ? std::min(2 * step[j], 1.0) : step[j] / 2;
      }
      // Rebuild from parameters to shed accumulated roundoff.
      normalize(p);
      amps = build(p);
      f = evaluate(amps, out.evaluations);
    }
    return f;
  }

  // Central-difference gradient of the smoothed margin.
  Eigen::VectorXd gradient(std::vector<Complex>& amps, double eps, double h, RestartOutcome& out) const {
    const std::size_t nparam = 2 * basis_.dim();
    Eigen::VectorXd g(static_cast<Eigen::Index>(nparam));
    for (std::size_t j = 0; j < nparam; ++j) {
      shift(amps, j, h);
      const double up = evaluate(amps, out.evaluations, eps);
      shift(amps, j, -2 * h);
      const double down = evaluate(amps, out.evaluations, eps);
      shift(amps, j, h);
      g[static_cast<Eigen::Index>(j)] = (up - down) / (2 * h);
    }
    return g;
  }

  // Limited-memory BFGS ascent with a backtracking line search.
  void climb_smoothed(std::vector<double>& p, double eps, RestartOutcome& out) const {
    const Eigen::Index np = static_cast<Eigen::Index>(p.size());
    const double h = 1e-3 * eps;
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(p.data(), np);
    auto at = [&](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
    std::vector<Complex> amps = build(p);
    double f = evaluate(amps, out.evaluations, eps);
    Eigen::VectorXd g = gradient(amps, eps, h, out);
    std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> memory;
    int flat = 0;
    for (int it = 0; it < kLbfgsIterations && out.iterations < opts_.max_iterations; ++it) {
      ++out.iterations;
      if (g.lpNorm<Eigen::Infinity>() < 1e-10) break;
      // Two-loop recursion for an ascent direction.
      Eigen::VectorXd q = g;
      std::vector<double> alpha(memory.size());
      for (std::size_t k = memory.size(); k-- > 0;) {
        const auto& [sk, yk] = memory[k];
        alpha[k] = sk.dot(q) / yk.dot(sk);
        q -= alpha[k] * yk;
      }
      if (!memory.empty()) q *= memory.back().first.dot(memory.back().second) / memory.back().second.squaredNorm();
      else q *= std::min(1.0, 0.1 / g.norm());
      for (std::size_t k = 0; k < memory.size(); ++k) {
        const auto& [sk, yk] = memory[k];
        q += sk * (alpha[k] - yk.dot(q) / yk.dot(sk));
      }
      // Pairs model -f, so the recursion applied to g yields an ascent direction.
      Eigen::VectorXd d = q;
      if (g.dot(d) <= 0) {
        memory.clear();
        d = g * std::min(1.0, 0.1 / g.norm());
      }
      double t = 1;
      Eigen::VectorXd xn;
      double fn = f;
      bool moved = false;
      for (int k = 0; k < 40; ++k, t /= 2) {
        xn = x + t * d;
        amps = build(at(xn));
        fn = evaluate(amps, out.evaluations, eps);
        if (fn >= f + 1e-4 * t * g.dot(d)) {
          moved = true;
          break;
        }
      }
      if (!moved) {
        if (memory.empty()) break;
        memory.clear();
        amps = build(at(x));
        continue;
      }
      // Keep the scale fixed; the value does not depend on it.
      const double scale = xn.norm();
      xn /= scale;
      amps = build(at(xn));
      const Eigen::VectorXd gn = gradient(amps, eps, h, out);
      const Eigen::VectorXd sk = xn - x, yk = g - gn;  // curvature pairs of -f
      if (yk.dot(sk) > 1e-12 * sk.norm() * yk.norm()) {
        memory.emplace_back(sk, yk);
        if (memory.size() > kLbfgsMemory) memory.pop_front();
      }
      flat = fn - f < 1e-13 ? flat + 1 : 0;
      x = xn;
      f = fn;
      g = gn;
      if (flat >= 3) break;
    }
    p = at(x);
    normalize(p);
  }

  std::vector<Complex> build(const std::vector<double>& p) const {
    std::vector<Complex> c(basis_.dim());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = Complex(p[2 * k], p[2 * k + 1]);
    return basis_.combine(c).amplitudes();
  }

  const SectorBasis& basis_;
  const Measure& measure_;
  PartialTracePlan plan_;
  const MaxOptions& opts_;
};

std::vector<RestartOutcome> run_restarts(const SectorSearch& search, std::uint64_t seed, std::uint64_t sector,
                                         const MaxOptions& opts) {
  std::vector<RestartOutcome> out(static_cast<std::size_t>(opts.restarts));
  auto work = [&](std::size_t r) { out[r] = search.run(CounterRng(seed, (sector << 32) | r)); };
  if (opts.threads <= 1) {
    for (std::size_t r = 0; r < out.size(); ++r) work(r);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < opts.threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t r = next++; r < out.size(); r = next++) work(r);
    });
  for (auto& th : pool) th.join();
  return out;
}

double evaluate_with_part(const Measure& measure, const StateVector& psi, const Subset& x,
                          const std::optional<Subset>& part) {
  if (measure.kind != MeasureKind::Negativity) return evaluate(measure, psi, x);
  return evaluate(measure, partial_trace(psi, x), part);
}

std::optional<Subset> default_part(const Measure& measure, const Subset& x) {
  if (measure.kind != MeasureKind::Negativity) return std::nullopt;
  std::vector<int> first(x.labels().begin(), x.labels().begin() + measure.negativity_split);
  return Subset::of(std::move(first), x.labels().back());
}

}  // namespace

MaximizationResult maximize(const PermGroup& G, int d, const Measure& measure, const Subset& x, const MaxOptions& opts) {
  opts.validate();
  measure.check_arity(x.size(), d);
  if (x.empty() || x.labels().back() > G.degree()) throw InvalidArgument("subset x does not fit the group degree");
  state_dimension(G.degree(), d);

  MaximizationResult result;
  result.x = x;
  result.measure = measure;
  result.value = -1;
  const auto chars = characters(G);
  for (std::size_t s = 0; s < chars.size(); ++s) {
    const SectorBasis basis = sector_basis(G, d, chars[s]);
    SectorDiagnostics diag;
    diag.character = chars[s];
    diag.dim = basis.dim();
    diag.best = -1;
    if (basis.dim() > 0) {
      const SectorSearch search(basis, measure, x, opts);
      const auto outcomes = run_restarts(search, opts.seed, s, opts);
      const RestartOutcome* best = nullptr;
      for (const auto& o : outcomes) {
        diag.restart_values.push_back(o.value);
        diag.restart_iterations.push_back(o.iterations);
        result.evaluations += o.evaluations;
        if (!best || o.value > best->value + kTieTolerance) best = &o;
      }
      diag.best = best->value;
      if (best->value > result.value + kTieTolerance) {
        result.value = best->value;
        result.witness = StateVector(G.degree(), d, best->amplitudes).normalized();
        result.character = chars[s];
      }
    }
    result.sectors.push_back(std::move(diag));
  }
  // Report the value of the normalized witness itself.
  result.value = evaluate_with_part(measure, result.witness, x, default_part(measure, x));
  return result;
}

Theorem1Report verify_theorem1(const PermGroup& G, int d, const Measure& measure, int m, const MaxOptions& opts,
                               const Theorem1Options& t1) {
  Theorem1Report rep;
  rep.group = G;
  rep.d = d;
  rep.measure = measure;
  rep.m = m;
  rep.tolerance = t1.tolerance;
  rep.transport_tolerance = t1.transport_tolerance;
  rep.reduction = normalizer_classes(G, m, t1.normalizer);
  const PermGroup& N = *rep.reduction.normalizer;

  for (const auto& orbit : rep.reduction.g_orbits.orbits)
    rep.orbit_results.push_back(maximize(G, d, measure, orbit.rep, opts));

  bool ok = true;
  for (const auto& cls : rep.reduction.normalizer_classes) {
    Theorem1Class c;
    c.orbits = cls;
    for (std::size_t o : cls) c.values.push_back(rep.orbit_results[o].value);
    const auto [lo, hi] = std::minmax_element(c.values.begin(), c.values.end());
    c.spread = *hi - *lo;
    c.pass = c.spread <= t1.tolerance;
    ok = ok && c.pass;
    rep.classes.push_back(std::move(c));
  }

  auto transport = [&](std::size_t orbit, const Permutation& nu) {
    const auto& res = rep.orbit_results[orbit];
    TransportCheck t;
    t.x = res.x;
    t.nu = nu;
    t.image = act_subset(nu, res.x);
    const auto part = default_part(measure, res.x);
    const std::optional<Subset> moved_part = part ? std::optional<Subset>(act_subset(nu, *part)) : std::nullopt;
    const StateVector moved = permute_state(nu, res.witness);
    t.value = evaluate_with_part(measure, res.witness, res.x, part);
    t.transported = evaluate_with_part(measure, moved, t.image, moved_part);
    t.error = std::abs(t.value - t.transported);
    t.stays_invariant = is_invariant(moved, G).has_value();
    ok = ok && t.error <= t1.transport_tolerance && t.stays_invariant;
    rep.transports.push_back(std::move(t));
  };

  const auto& orbits = rep.reduction.g_orbits.orbits;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (const auto& nu : N.generators()) transport(o, nu);
  for (const auto& cls : rep.reduction.normalizer_classes)
    for (std::size_t k = 1; k < cls.size(); ++k)
      if (auto nu = find_normalizer_witness(G, N, orbits[cls[0]].rep, orbits[cls[k]].rep)) transport(cls[0], *nu);

  rep.pass = ok;
  return rep;
}

Theorem2Report verify_theorem2(const PermGroup& G, const PermGroup& H, const std::vector<int>& Y, const Subset& x,
                               int d, const Measure& measure, const MaxOptions& opts) {
  if (!is_normal(G, H)) throw InvalidArgument("verify_theorem2: H is not a normal subgroup of G");
  const PointPartition blocks = point_orbits(H);
  std::vector<int> block(Y);
  std::sort(block.begin(), block.end());
  if (std::find(blocks.blocks.begin(), blocks.blocks.end(), block) == blocks.blocks.end())
    throw InvalidArgument("verify_theorem2: Y is not an orbit of H");
  for (int l : x.labels())
    if (!std::binary_search(block.begin(), block.end(), l)) throw InvalidArgument("verify_theorem2: x is not inside Y");

  Theorem2Report rep;
  rep.group = G;
  rep.subgroup = H;
  rep.block = block;
  rep.x = x;
  rep.d = d;
  rep.measure = measure;
  rep.restricted = restrict_to(H, block);

  rep.lhs = maximize(G, d, measure, x, opts);
  rep.rhs = maximize(rep.restricted.group, d, measure, rep.restricted.to_local(x), opts);
  rep.difference = std::abs(rep.lhs.value - rep.rhs.value);

  rep.woven = weave_state(rep.rhs.witness, blocks);
  rep.woven_value = evaluate_with_part(measure, rep.woven, x, default_part(measure, x));
  rep.weave_error = std::abs(rep.woven_value - rep.rhs.value);
  rep.woven_character = is_invariant(rep.woven, G);

  // rho_Y must commute with every U_h, h in H|Y, for any G-invariant state.
  std::vector<StateVector> probes{rep.lhs.witness, rep.woven};
  CounterRng rng(opts.seed, 0xC0FFEEull);
  for (const auto& chi : characters(G)) {
    const SectorBasis basis = sector_basis(G, d, chi);
    if (basis.dim() == 0) continue;
    for (int k = 0; k < 2; ++k) probes.push_back(random_sector_state(basis, rng));
  }
  const Subset ysub = Subset::of(block, G.degree());
  std::vector<Eigen::MatrixXcd> unitaries;
  for (const auto& h : rep.restricted.group.elements()) unitaries.push_back(permutation_unitary(h, d));
  for (const auto& psi : probes) {
    const DensityMatrix rho = partial_trace(psi, ysub);
    for (const auto& u : unitaries) rep.commutator_residual = std::max(rep.commutator_residual, commutator_norm(rho.matrix, u));
  }

  rep.pass = rep.difference <= rep.tolerance && rep.weave_error <= rep.weave_tolerance &&
             rep.woven_character.has_value() && rep.commutator_residual <= rep.commutator_tolerance;
  return rep;
}

}  // namespace symorb
