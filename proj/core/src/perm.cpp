#include "symorb/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace symorb {

namespace {

void check_degree(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be at least 1");
  if (n > kMaxDegree) throw InvalidArgument("permutation degree exceeds " + std::to_string(kMaxDegree));
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(n));
  std::iota(p.img_.begin(), p.img_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<bool> seen(images.size(), false);
  Permutation p;
  p.img_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n) throw InvalidArgument("image " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)]) throw InvalidArgument("image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k];
      if (a < 1 || a > n) throw InvalidArgument("cycle label " + std::to_string(a) + " out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(a - 1)]) throw InvalidArgument("label " + std::to_string(a) + " appears in more than one cycle position");
      used[static_cast<std::size_t>(a - 1)] = true;
      const int b = c[(k + 1) % c.size()];
      p.img_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) q.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return q;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_lengths()) result = std::lcm(result, len);
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("compose: permutations of different degree");
  Permutation r;
  r.img_.resize(p.img_.size());
  for (std::size_t i = 0; i < r.img_.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

Permutation conjugate(const Permutation& g, const Permutation& h) { return g * h * g.inverse(); }

Permutation parse_cycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool open = false;
  int max_label = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("cycle notation, position " + std::to_string(pos) + ": " + what);
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
    } else if (c == '(') {
      if (open) fail("nested '('");
      open = true;
      current.clear();
      ++pos;
    } else if (c == ')') {
      if (!open) fail("unmatched ')'");
      open = false;
      if (current.size() > 1) cycles.push_back(current);
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) fail("label outside parentheses");
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) fail("bad integer");
      if (v < 1) fail("labels are 1-based");
      current.push_back(v);
      max_label = std::max(max_label, v);
      pos = static_cast<std::size_t>(ptr - text.data());
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (open) fail("unterminated cycle");
  if (n == 0) n = std::max(max_label, 1);
  if (max_label > n) throw InvalidArgument("cycle notation: label " + std::to_string(max_label) + " exceeds degree " + std::to_string(n));
  return Permutation::from_cycles(n, cycles);
}

std::string to_cycle_string(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

// ---- Subset ----

Subset Subset::of(std::vector<int> labels, int n) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > n)
      throw InvalidArgument("subset label " + std::to_string(labels[i]) + " out of range 1.." + std::to_string(n));
    if (i > 0 && labels[i] == labels[i - 1]) throw InvalidArgument("subset label " + std::to_string(labels[i]) + " repeated");
  }
  Subset s;
  s.labels_ = std::move(labels);
  return s;
}

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) s.labels_.push_back(i + 1);
  return s;
}

bool Subset::contains(int label) const { return std::binary_search(labels_.begin(), labels_.end(), label); }

std::uint64_t Subset::mask() const {
  std::uint64_t m = 0;
  for (int l : labels_) {
    if (l > 64) throw InvalidArgument("subset mask requires labels <= 64");
    m |= std::uint64_t{1} << (l - 1);
  }
  return m;
}

Subset Subset::complement(int n) const {
  std::vector<int> out;
  for (int l = 1; l <= n; ++l)
    if (!contains(l)) out.push_back(l);
  return Subset::of(std::move(out), n);
}

Subset act_subset(const Permutation& g, const Subset& x) {
  std::vector<int> out;
  out.reserve(x.size());
  for (int l : x.labels()) {
    if (l > g.degree()) throw InvalidArgument("act_subset: label exceeds permutation degree");
    out.push_back(g(l));
  }
  return Subset::of(std::move(out), g.degree());
}

std::uint64_t act_mask(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out |= std::uint64_t{1} << g.image0(i);
  return out;
}

Subset parse_subset(std::string_view text, int n) {
  std::vector<int> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}') {
      ++pos;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw InvalidArgument("subset, position " + std::to_string(pos) + ": expected a label");
    labels.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Subset::of(std::move(labels), n);
}

std::string to_string(const Subset& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x.labels()[i]);
  return s + "}";
}

// ---- PermGroup ----

struct PermGroup::Data {
  int n = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::string name;
};

namespace {

std::vector<Permutation> closure(int n, std::span<const Permutation> gens, std::size_t cap) {
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> queue;
  const Permutation e = Permutation::identity(n);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > cap)
          throw ResourceError("group closure exceeded element cap of " + std::to_string(cap));
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermGroup PermGroup::generate(int n, std::vector<Permutation> generators, std::size_t cap, std::string name) {
  check_degree(n);
  for (const auto& g : generators)
    if (g.degree() != n) throw InvalidArgument("generator degree " + std::to_string(g.degree()) + " does not match " + std::to_string(n));
  auto d = std::make_shared<Data>();
  d->n = n;
  d->elements = closure(n, generators, cap);
  d->generators = std::move(generators);
  d->name = std::move(name);
  PermGroup G;
  G.data_ = std::move(d);
  return G;
}

PermGroup PermGroup::from_elements(int n, std::vector<Permutation> elements, std::string name) {
  check_degree(n);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto d = std::make_shared<Data>();
  d->n = n;
  d->generators = small_generating_set(n, elements);
  d->elements = std::move(elements);
  d->name = std::move(name);
  PermGroup G;
  G.data_ = std::move(d);
  return G;
}

int PermGroup::degree() const { return data_ ? data_->n : 0; }

const std::vector<Permutation>& PermGroup::generators() const {
  static const std::vector<Permutation> none;
  return data_ ? data_->generators : none;
}

const std::vector<Permutation>& PermGroup::elements() const {
  static const std::vector<Permutation> none;
  return data_ ? data_->elements : none;
}

const std::string& PermGroup::name() const {
  static const std::string none;
  return data_ ? data_->name : none;
}

PermGroup PermGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  PermGroup G;
  G.data_ = std::move(d);
  return G;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  const auto& el = elements();
  auto it = std::lower_bound(el.begin(), el.end(), p);
  if (it == el.end() || *it != p) return npos;
  return static_cast<std::size_t>(it - el.begin());
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p) != npos; }

bool PermGroup::is_transitive() const {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& g : elements()) seen[static_cast<std::size_t>(g.image0(0))] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Permutation> small_generating_set(int n, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation> generated{Permutation::identity(n)};
  for (const auto& p : elements) {
    if (generated.count(p)) continue;
    gens.push_back(p);
    auto cl = closure(n, gens, kDefaultElementCap);
    generated = std::unordered_set<Permutation>(cl.begin(), cl.end());
  }
  return gens;
}

}  // namespace symorb

std::size_t std::hash<symorb::Permutation>::operator()(const symorb::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : p.raw()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}
