#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kleitman {

// A subset of the ground set {1, ..., n}. Value type, immutable through the
// public surface. Two backings share this one contract: subsets on at most 64
// points live in a single machine word (the solver and the spectral code stay
// on that fast path via word0/from_word), larger ground sets spill into a
// multi-word bit vector (constructions go up to n ~ 1e6).
class Subset {
 public:
  Subset() : n_(0) {}
  explicit Subset(int n);  // empty set on [n]

  static Subset of(int n, std::initializer_list<int> elems);
  static Subset from_elements(int n, const std::vector<int>& elems);
  static Subset from_word(int n, std::uint64_t bits);  // n <= 64
  static Subset full(int n);

  int ground_size() const { return n_; }
  int cardinality() const;
  bool empty() const { return cardinality() == 0; }
  bool contains(int e) const;  // 1-based

  Subset with(int e) const;
  Subset without(int e) const;
  Subset sym_diff(const Subset& o) const;
  Subset union_with(const Subset& o) const;
  Subset intersect(const Subset& o) const;
  int intersection_size(const Subset& o) const;

  // Low word of the bit vector; the whole set when n <= 64.
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::vector<int> elements() const;  // ascending, 1-based

  bool operator==(const Subset& o) const = default;

  // Canonical order: cardinality first, then the set owning the smallest
  // element of the symmetric difference comes first. Used by Family.
  bool canonical_less(const Subset& o) const;

 private:
  void check_same_ground(const Subset& o) const;

  int n_;
  std::vector<std::uint64_t> words_;
};

// |A sym_diff B|; throws InvalidInput on ground-set mismatch.
int distance(const Subset& a, const Subset& b);

}  // namespace kleitman
