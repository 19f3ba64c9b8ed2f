#include "kleitman/family.hpp"

#include <algorithm>

#include "kleitman/errors.hpp"

namespace kleitman {

Family::Family(int n) : n_(n) {
  if (n < 1) throw InvalidInput("ground size must be positive");
}

Family::Family(int n, std::vector<Subset> sets) : Family(n) {
  for (const Subset& s : sets) {
    if (s.ground_size() != n) throw InvalidInput("family member on wrong ground set");
  }
  std::sort(sets.begin(), sets.end(),
            [](const Subset& a, const Subset& b) { return a.canonical_less(b); });
  for (size_t i = 1; i < sets.size(); ++i) {
    if (sets[i] == sets[i - 1]) throw InvalidInput("duplicate set in family");
  }
  sets_ = std::move(sets);
}

bool Family::insert(const Subset& s) {
  if (s.ground_size() != n_) throw InvalidInput("family member on wrong ground set");
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s,
                             [](const Subset& a, const Subset& b) { return a.canonical_less(b); });
  if (it != sets_.end() && *it == s) return false;
  sets_.insert(it, s);
  return true;
}

bool Family::contains(const Subset& s) const {
  if (s.ground_size() != n_) return false;
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s,
                             [](const Subset& a, const Subset& b) { return a.canonical_less(b); });
  return it != sets_.end() && *it == s;
}

}  // namespace kleitman
