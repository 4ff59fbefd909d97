#include "symorb/group_theory.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace symorb {

namespace {

constexpr std::size_t kMaxTableOrder = 4096;

// Cayley table over the sorted element list.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& G) : G_(G), order_(G.order()) {
    if (order_ > kMaxTableOrder)
      throw ResourceError("group of order " + std::to_string(order_) + " exceeds table limit " +
                          std::to_string(kMaxTableOrder));
    const auto& el = G.elements();
    mult_.resize(order_ * order_);
    inv_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      inv_[i] = G.index_of(el[i].inverse());
      for (std::size_t j = 0; j < order_; ++j) mult_[i * order_ + j] = G.index_of(el[i] * el[j]);
    }
  }

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * order_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t conj(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv(g)); }

  // Subgroup generated by the flagged elements; returns membership flags.
  std::vector<char> generated(const std::vector<char>& seed) const {
    std::vector<char> in(order_, 0);
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < order_; ++i)
      if (seed[i]) gens.push_back(i);
    std::deque<std::size_t> queue{0};
    in[0] = 1;  // identity is elements()[0]
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t g : gens) {
        const std::size_t b = mul(a, g);
        if (!in[b]) {
          in[b] = 1;
          queue.push_back(b);
        }
      }
    }
    return in;
  }

  PermGroup subgroup(const std::vector<char>& flags) const {
    std::vector<Permutation> els;
    for (std::size_t i = 0; i < order_; ++i)
      if (flags[i]) els.push_back(G_.elements()[i]);
    return PermGroup::from_elements(G_.degree(), std::move(els));
  }

 private:
  const PermGroup& G_;
  std::size_t order_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inv_;
};

std::vector<std::vector<std::size_t>> class_indices(const GroupTable& t) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> done(t.order(), 0);
  for (std::size_t h = 0; h < t.order(); ++h) {
    if (done[h]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < t.order(); ++g) {
      const std::size_t c = t.conj(g, h);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

// ---- Character ----

Character::Character(PermGroup group, std::vector<std::int64_t> numerators)
    : group_(std::move(group)), num_(std::move(numerators)) {
  if (num_.size() != group_.order()) throw InvalidArgument("character values must cover every group element");
}

Turns Character::turns_at(std::size_t i) const {
  const auto den = static_cast<std::int64_t>(group_.order());
  const std::int64_t num = mod(num_.at(i), den);
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Turns Character::turns(const Permutation& g) const {
  const std::size_t i = group_.index_of(g);
  if (i == PermGroup::npos) throw InvalidArgument("character evaluated outside its group");
  return turns_at(i);
}

std::complex<double> Character::phase_at(std::size_t i) const {
  const Turns t = turns_at(i);
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(t.num) / static_cast<double>(t.den));
}

std::complex<double> Character::phase(const Permutation& g) const {
  const std::size_t i = group_.index_of(g);
  if (i == PermGroup::npos) throw InvalidArgument("character evaluated outside its group");
  return phase_at(i);
}

bool Character::is_trivial() const {
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t v) { return v == 0; });
}

// ---- PointPartition / Restriction ----

std::size_t PointPartition::block_of(int label) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), label)) return b;
  throw InvalidArgument("label " + std::to_string(label) + " not in partition");
}

bool PointPartition::equal_sizes() const {
  return std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return b.size() == blocks.front().size(); });
}

int Restriction::to_local(int global) const {
  auto it = std::find(labels.begin(), labels.end(), global);
  if (it == labels.end()) throw InvalidArgument("label " + std::to_string(global) + " is outside the restricted set");
  return static_cast<int>(it - labels.begin()) + 1;
}

Subset Restriction::to_local(const Subset& x) const {
  std::vector<int> out;
  for (int l : x.labels()) out.push_back(to_local(l));
  return Subset::of(std::move(out), static_cast<int>(labels.size()));
}

// ---- classes and subgroups ----

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& G) {
  const GroupTable t(G);
  std::vector<std::vector<Permutation>> out;
  for (const auto& cls : class_indices(t)) {
    std::vector<Permutation> c;
    for (std::size_t i : cls) c.push_back(G.elements()[i]);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_subgroup(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree()) return false;
  return std::all_of(H.elements().begin(), H.elements().end(), [&](const auto& h) { return G.contains(h); });
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  if (!is_subgroup(G, H)) return false;
  for (const auto& g : G.elements())
    for (const auto& h : H.generators())
      if (!H.contains(conjugate(g, h))) return false;
  return true;
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& G) {
  const GroupTable t(G);
  const auto classes = class_indices(t);
  // Every normal subgroup is a join of normal closures of classes, so adding
  // one class at a time from the trivial group reaches all of them.
  std::set<std::vector<char>> found;
  std::deque<std::vector<char>> queue;
  std::vector<char> trivial(t.order(), 0);
  trivial[0] = 1;
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (const auto& cls : classes) {
      if (cur[cls.front()]) continue;
      auto seed = cur;
      for (std::size_t i : cls) seed[i] = 1;
      auto next = t.generated(seed);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<PermGroup> out;
  for (const auto& flags : found) out.push_back(t.subgroup(flags));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

PermGroup derived_subgroup(const PermGroup& G) {
  const GroupTable t(G);
  std::vector<char> seed(t.order(), 0);
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = 0; b < t.order(); ++b) seed[t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b))] = 1;
  return t.subgroup(t.generated(seed));
}

// ---- normalizer ----

namespace {

struct NormalizerSearch {
  const PermGroup& G;
  const NormalizerOptions& opts;
  int n;
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  std::vector<int> order;          // points in assignment order
  std::vector<int> image;          // image[p] = v(p) or -1
  std::vector<char> used;          // target point taken
  std::vector<Permutation> found;
  std::uint64_t nodes = 0;

  NormalizerSearch(const PermGroup& g, const NormalizerOptions& o) : G(g), opts(o), n(g.degree()) {
    for (const auto& s : G.generators())
      if (!s.is_identity()) {
        gens.push_back(s);
        gens_inv.push_back(s.inverse());
      }
    // Breadth-first along generator edges so constraints bind early.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::deque<int> q{start};
      seen[static_cast<std::size_t>(start)] = 1;
      while (!q.empty()) {
        const int p = q.front();
        q.pop_front();
        order.push_back(p);
        for (const auto& s : gens) {
          for (int r : {s.image0(p), s.inverse().image0(p)}) {
            if (!seen[static_cast<std::size_t>(r)]) {
              seen[static_cast<std::size_t>(r)] = 1;
              q.push_back(r);
            }
          }
        }
      }
    }
    image.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), 0);
  }

  // candidates[j]: indices of G elements that may equal v * gens[j] * v^-1.
  void run() {
    std::vector<std::vector<std::size_t>> candidates(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto type = gens[j].cycle_lengths();
      for (std::size_t k = 0; k < G.order(); ++k)
        if (G.elements()[k].cycle_lengths() == type) candidates[j].push_back(k);
    }
    recurse(0, candidates);
  }

  void recurse(std::size_t depth, const std::vector<std::vector<std::size_t>>& candidates) {
    if (++nodes > opts.node_budget)
      throw ResourceError("normalizer search exceeded node budget of " + std::to_string(opts.node_budget));
    if (depth == order.size()) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) img[static_cast<std::size_t>(p)] = image[static_cast<std::size_t>(p)] + 1;
      found.push_back(Permutation::from_images(img));
      return;
    }
    const int p = order[depth];
    for (int target = 0; target < n; ++target) {
      if (used[static_cast<std::size_t>(target)]) continue;
      image[static_cast<std::size_t>(p)] = target;
      used[static_cast<std::size_t>(target)] = 1;
      std::vector<std::vector<std::size_t>> next(gens.size());
      bool ok = true;
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        // The conjugate sends v(i) to v(s(i)); check the pairs that involve p.
        const int fwd = image[static_cast<std::size_t>(gens[j].image0(p))];
        const int pre_point = gens_inv[j].image0(p);
        const int back = image[static_cast<std::size_t>(pre_point)];
        for (std::size_t k : candidates[j]) {
          const auto& c = G.elements()[k];
          if (fwd >= 0 && c.image0(target) != fwd) continue;
          if (back >= 0 && c.image0(back) != target) continue;
          next[j].push_back(k);
        }
        ok = !next[j].empty();
      }
      if (ok) recurse(depth + 1, next);
      image[static_cast<std::size_t>(p)] = -1;
      used[static_cast<std::size_t>(target)] = 0;
    }
  }
};

}  // namespace

PermGroup normalizer(const PermGroup& G, const NormalizerOptions& opts) {
  if (G.degree() > opts.max_degree)
    throw ResourceError("normalizer search limited to degree " + std::to_string(opts.max_degree));
  NormalizerSearch search(G, opts);
  search.run();
  std::string name = G.name().empty() ? std::string("N(G)") : "N(" + G.name() + ")";
  return PermGroup::from_elements(G.degree(), std::move(search.found), std::move(name));
}

std::optional<Permutation> find_normalizer_witness(const PermGroup& G, const PermGroup& N, const Subset& x1,
                                                   const Subset& x2) {
  if (x1.size() != x2.size()) throw InvalidArgument("witness search needs subsets of equal size");
  std::set<std::uint64_t> orbit2;
  for (const auto& g : G.elements()) orbit2.insert(act_mask(g, x2.mask()));
  for (const auto& v : N.elements())
    if (orbit2.count(act_mask(v, x1.mask()))) return v;
  return std::nullopt;
}

std::optional<Permutation> find_normalizer_witness(const PermGroup& G, const Subset& x1, const Subset& x2) {
  return find_normalizer_witness(G, normalizer(G), x1, x2);
}

// ---- orbits and restriction ----

PointPartition point_orbits(const PermGroup& H) {
  const int n = H.degree();
  PointPartition part;
  part.n = n;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    std::vector<int> block;
    std::deque<int> q{p};
    seen[static_cast<std::size_t>(p)] = 1;
    while (!q.empty()) {
      const int a = q.front();
      q.pop_front();
      block.push_back(a + 1);
      for (const auto& g : H.generators()) {
        const int b = g.image0(a);
        if (!seen[static_cast<std::size_t>(b)]) {
          seen[static_cast<std::size_t>(b)] = 1;
          q.push_back(b);
        }
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

Restriction restrict_to(const PermGroup& H, std::span<const int> Y) {
  std::vector<int> labels(Y.begin(), Y.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw InvalidArgument("restriction to an empty label set");
  for (int l : labels)
    if (l < 1 || l > H.degree()) throw InvalidArgument("restriction label " + std::to_string(l) + " out of range");
  std::map<int, int> local;
  for (std::size_t k = 0; k < labels.size(); ++k) local[labels[k]] = static_cast<int>(k) + 1;
  auto restrict_one = [&](const Permutation& g) {
    std::vector<int> img;
    for (int l : labels) {
      auto it = local.find(g(l));
      if (it == local.end()) throw InvalidArgument("label set is not invariant under the group");
      img.push_back(it->second);
    }
    return Permutation::from_images(img);
  };
  std::vector<Permutation> gens;
  for (const auto& g : H.generators()) gens.push_back(restrict_one(g));
  Restriction r;
  r.group = PermGroup::generate(static_cast<int>(labels.size()), std::move(gens), kDefaultElementCap,
                                H.name().empty() ? std::string() : H.name() + "|Y");
  r.labels = std::move(labels);
  return r;
}

// ---- characters ----

std::vector<Character> characters(const PermGroup& G) {
  const auto N = static_cast<std::int64_t>(G.order());
  const GroupTable t(G);
  std::vector<std::size_t> gens;
  std::vector<std::int64_t> steps;  // admissible value spacing per generator
  for (const auto& g : G.generators()) {
    if (g.is_identity()) continue;
    gens.push_back(G.index_of(g));
    steps.push_back(N / g.order());
  }
  std::vector<std::int64_t> choice(gens.size(), 0);
  std::vector<Character> out;
  // Odometer over generator values k * N/ord(g), k < ord(g).
  while (true) {
    std::vector<std::int64_t> val(static_cast<std::size_t>(N), -1);
    val[0] = 0;
    std::deque<std::size_t> q{0};
    bool ok = true;
    while (!q.empty() && ok) {
      const std::size_t a = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t b = t.mul(a, gens[j]);
        const std::int64_t v = mod(val[a] + choice[j] * steps[j], N);
        if (val[b] < 0) {
          val[b] = v;
          q.push_back(b);
        } else if (val[b] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(G, std::move(val));
    std::size_t j = 0;
    for (; j < gens.size(); ++j) {
      if (++choice[j] < N / steps[j]) break;
      choice[j] = 0;
    }
    if (j == gens.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Character& a, const Character& b) {
    if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
    return a.numerators() < b.numerators();
  });
  return out;
}

}  // namespace symorb
