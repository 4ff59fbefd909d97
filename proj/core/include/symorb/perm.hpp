#pragma once

// Permutations of party labels and finitely generated permutation groups.
//
// Every public interface is 1-based: a permutation of degree n acts on the
// labels 1..n, and `images()[i-1]` is the image of label i. Storage is
// 0-based bytes, so the degree is limited to 255.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symorb/error.hpp"

namespace symorb {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;
inline constexpr int kMaxDegree = 255;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// Builds from 1-based images; throws InvalidArgument unless a bijection.
  static Permutation from_images(std::span<const int> images);
  /// Builds from disjoint cycles of 1-based labels.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int label) const { return img_[static_cast<std::size_t>(label - 1)] + 1; }
  /// 0-based image of 0-based point; no range check.
  int image0(int point) const { return img_[static_cast<std::size_t>(point)]; }

  std::vector<int> images() const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  /// Nontrivial cycles, each starting at its least label, ordered by that label.
  std::vector<std::vector<int>> cycles() const;
  /// Lengths of all cycles including fixed points, descending.
  std::vector<int> cycle_lengths() const;

  const std::vector<std::uint8_t>& raw() const { return img_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<std::uint8_t> img_;
};

/// Applies q first, then p: result(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g * h * g^-1
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Position j of the result holds t[g^-1(j)], so the entry at position i moves to g(i).
template <class T>
std::vector<T> act_tuple(const Permutation& g, std::span<const T> t) {
  if (t.size() != static_cast<std::size_t>(g.degree()))
    throw InvalidArgument("act_tuple: tuple length does not match permutation degree");
  std::vector<T> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[static_cast<std::size_t>(g.image0(static_cast<int>(i)))] = t[i];
  return out;
}

template <class T>
std::vector<T> act_tuple(const Permutation& g, const std::vector<T>& t) {
  return act_tuple(g, std::span<const T>(t));
}

/// Cycle notation such as "(2 8 6 11)(3 10 5 9)(4 7)". Commas are accepted
/// as separators. When n is 0 the degree is the largest label mentioned.
Permutation parse_cycles(std::string_view text, int n = 0);
/// "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// A strictly increasing list of distinct labels, i.e. an element of X_m.
class Subset {
 public:
  Subset() = default;
  /// Sorts and validates against degree n; duplicates or out-of-range labels throw.
  static Subset of(std::vector<int> labels, int n);
  static Subset from_mask(std::uint64_t mask);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool contains(int label) const;
  /// Bit (label-1) set for every member; requires labels <= 64.
  std::uint64_t mask() const;
  Subset complement(int n) const;

  friend auto operator<=>(const Subset&, const Subset&) = default;
  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<int> labels_;
};

Subset act_subset(const Permutation& g, const Subset& x);
/// Comma separated 1-based labels, e.g. "1,3".
Subset parse_subset(std::string_view text, int n);
std::string to_string(const Subset& x);

/// Image of a label bitmask under g; requires degree <= 64.
std::uint64_t act_mask(const Permutation& g, std::uint64_t mask);

/// Immutable finite permutation group with its full sorted element list.
/// Copies share the underlying data.
class PermGroup {
 public:
  PermGroup() = default;

  /// Breadth-first closure of the generators. Throws ResourceError if the
  /// closure grows beyond `cap` elements.
  static PermGroup generate(int n, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultElementCap, std::string name = {});
  /// Wraps an element set already known to be a group, choosing a small generating set.
  static PermGroup from_elements(int n, std::vector<Permutation> elements, std::string name = {});

  int degree() const;
  std::size_t order() const { return elements().size(); }
  const std::vector<Permutation>& generators() const;
  /// Sorted lexicographically by images; identity first.
  const std::vector<Permutation>& elements() const;
  const std::string& name() const;
  PermGroup renamed(std::string name) const;

  bool contains(const Permutation& p) const;
  /// Position in elements(), or npos.
  std::size_t index_of(const Permutation& p) const;
  bool is_transitive() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

inline bool is_member(const PermGroup& g, const Permutation& p) { return g.contains(p); }

/// Greedy generating set: scans `elements` in order and keeps each one not
/// yet generated by the kept ones.
std::vector<Permutation> small_generating_set(int n, std::span<const Permutation> elements);

}  // namespace symorb

template <>
struct std::hash<symorb::Permutation> {
  std::size_t operator()(const symorb::Permutation& p) const noexcept;
};
