#include "symorb/orbits.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace symorb {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::uint64_t> masks_of_size(int n, int m) {
  std::vector<std::uint64_t> out;
  if (m == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Gosper's hack over all m-bit masks below 2^n.
  for (std::uint64_t v = (std::uint64_t{1} << m) - 1; v < limit;) {
    out.push_back(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace

std::size_t OrbitPartition::orbit_of(const Subset& x) const {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), x)) return i;
  throw InvalidArgument("subset " + to_string(x) + " is not in any orbit");
}

std::size_t OrbitPartition::total_members() const {
  std::size_t s = 0;
  for (const auto& o : orbits) s += o.members.size();
  return s;
}

bool ReductionReport::reducible(std::size_t orbit) const {
  return std::any_of(theorem2_entries.begin(), theorem2_entries.end(),
                     [&](const Theorem2Entry& e) { return e.orbit == orbit; });
}

std::size_t ReductionReport::class_of(std::size_t orbit) const {
  for (std::size_t c = 0; c < normalizer_classes.size(); ++c)
    if (std::binary_search(normalizer_classes[c].begin(), normalizer_classes[c].end(), orbit)) return c;
  throw InvalidArgument("orbit index outside report");
}

OrbitPartition enumerate_orbits(const PermGroup& G, int m) {
  const int n = G.degree();
  if (n > kMaxEnumerationDegree)
    throw ResourceError("orbit enumeration limited to n <= " + std::to_string(kMaxEnumerationDegree));
  if (m < 0 || m > n) throw InvalidArgument("subset size m=" + std::to_string(m) + " outside 0.." + std::to_string(n));

  const auto masks = masks_of_size(n, m);
  std::unordered_map<std::uint64_t, std::size_t> orbit_id;
  orbit_id.reserve(masks.size() * 2);
  std::vector<std::vector<std::uint64_t>> raw;
  for (std::uint64_t start : masks) {
    if (orbit_id.count(start)) continue;
    const std::size_t id = raw.size();
    raw.emplace_back();
    std::deque<std::uint64_t> q{start};
    orbit_id[start] = id;
    while (!q.empty()) {
      const std::uint64_t a = q.front();
      q.pop_front();
      raw[id].push_back(a);
      for (const auto& g : G.generators()) {
        const std::uint64_t b = act_mask(g, a);
        if (orbit_id.emplace(b, id).second) q.push_back(b);
      }
    }
  }

  OrbitPartition part;
  part.group = G;
  part.m = m;
  for (const auto& masks_in_orbit : raw) {
    Orbit o;
    for (std::uint64_t mk : masks_in_orbit) o.members.push_back(Subset::from_mask(mk));
    std::sort(o.members.begin(), o.members.end());
    o.rep = o.members.front();
    part.orbits.push_back(std::move(o));
  }
  std::sort(part.orbits.begin(), part.orbits.end(), [](const Orbit& a, const Orbit& b) { return a.rep < b.rep; });
  return part;
}

ReductionReport normalizer_classes(const PermGroup& G, int m, const std::optional<PermGroup>& N) {
  ReductionReport r;
  r.group = G;
  r.m = m;
  r.subsets = binomial(G.degree(), m);
  r.g_orbits = enumerate_orbits(G, m);
  r.normalizer = N ? *N : normalizer(G);

  const auto& orbits = r.g_orbits.orbits;
  std::unordered_map<std::uint64_t, std::size_t> member_orbit;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const auto& x : orbits[i].members) member_orbit[x.mask()] = i;
  UnionFind uf(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const auto& v : r.normalizer->generators()) uf.unite(i, member_orbit.at(act_mask(v, orbits[i].rep.mask())));

  std::vector<std::vector<std::size_t>> classes(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) classes[uf.find(i)].push_back(i);
  for (auto& c : classes)
    if (!c.empty()) r.normalizer_classes.push_back(std::move(c));
  return r;
}

namespace {

void fill_theorem2(ReductionReport& r) {
  const PermGroup& G = r.group;
  r.theorem2_entries.clear();
  if (r.m < 2) return;
  for (const auto& H : normal_subgroups(G)) {
    if (H.order() == 1 || H.order() == G.order()) continue;
    const PointPartition blocks = point_orbits(H);
    for (const auto& Y : blocks.blocks) {
      if (static_cast<int>(Y.size()) < r.m) continue;
      std::uint64_t ymask = 0;
      for (int l : Y) ymask |= std::uint64_t{1} << (l - 1);
      std::optional<Restriction> restricted;
      for (std::size_t i = 0; i < r.g_orbits.orbits.size(); ++i) {
        const bool already = std::any_of(r.theorem2_entries.begin(), r.theorem2_entries.end(), [&](const auto& e) {
          return e.orbit == i && e.subgroup.elements() == H.elements();
        });
        if (already) continue;
        for (const auto& x : r.g_orbits.orbits[i].members) {
          if ((x.mask() & ~ymask) != 0) continue;
          if (!restricted) restricted = restrict_to(H, Y);
          r.theorem2_entries.push_back({i, H, Y, *restricted, x});
          break;
        }
      }
    }
  }
  std::stable_sort(r.theorem2_entries.begin(), r.theorem2_entries.end(),
                   [](const Theorem2Entry& a, const Theorem2Entry& b) { return a.orbit < b.orbit; });
}

}  // namespace

ReductionReport theorem2_reductions(const PermGroup& G, int m) {
  ReductionReport r;
  r.group = G;
  r.m = m;
  r.subsets = binomial(G.degree(), m);
  r.g_orbits = enumerate_orbits(G, m);
  fill_theorem2(r);
  return r;
}

ReductionReport reduction_report(const PermGroup& G, int m, const std::optional<PermGroup>& N) {
  ReductionReport r = normalizer_classes(G, m, N);
  fill_theorem2(r);
  r.unique_count = static_cast<std::size_t>(
      std::count_if(r.normalizer_classes.begin(), r.normalizer_classes.end(), [&](const auto& cls) {
        return std::none_of(cls.begin(), cls.end(), [&](std::size_t o) { return r.reducible(o); });
      }));
  return r;
}

}  // namespace symorb
