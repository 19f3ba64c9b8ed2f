#pragma once

#include <cstddef>
#include <vector>

#include "kleitman/subset.hpp"

namespace kleitman {

// A set family on {1, ..., n}: distinct subsets kept in canonical order
// (by cardinality, then lexicographic bit order) so that serialization and
// solver output are deterministic.
class Family {
 public:
  explicit Family(int n);
  Family(int n, std::vector<Subset> sets);  // canonicalizes; throws on duplicates

  int ground_size() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  // Keeps canonical order; returns false (and leaves the family unchanged)
  // when the subset is already a member.
  bool insert(const Subset& s);
  bool contains(const Subset& s) const;

  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  std::vector<Subset>::const_iterator begin() const { return sets_.begin(); }
  std::vector<Subset>::const_iterator end() const { return sets_.end(); }
  const std::vector<Subset>& sets() const { return sets_; }

  bool operator==(const Family& o) const = default;

 private:
  int n_;
  std::vector<Subset> sets_;
};

}  // namespace kleitman
