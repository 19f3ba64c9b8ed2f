#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleitman/distance_spec.hpp"
#include "kleitman/family.hpp"

namespace kleitman {

// All pairwise distances, sorted ascending, one entry per unordered pair.
std::vector<int> distance_multiset(const Family& f);

// Distinct pairwise distances, sorted ascending.
std::vector<int> distance_set(const Family& f);

// Distinct pairwise intersection sizes, sorted ascending.
std::vector<int> intersection_sizes(const Family& f);

struct ValidationResult {
  bool ok = true;
  // first offending pair (indices into the family) when !ok
  std::optional<std::pair<std::size_t, std::size_t>> violating;
  std::string detail;
};

// Every pairwise distance must lie in spec. Exact, O(|F|^2).
ValidationResult validate_family(const Family& f, const DistanceSpec& spec);

// Every member k-uniform, every pairwise intersection size in L.
ValidationResult validate_family(const Family& f, const IntersectionSpec& spec);

// Seeded random-pair spot check for families too large for the exact pass;
// checks all pairs when |F| <= exhaustive_cap.
ValidationResult validate_family_sampled(const Family& f, const DistanceSpec& spec,
                                         std::size_t exhaustive_cap = 3000,
                                         std::size_t samples = 2'000'000,
                                         std::uint64_t seed = 1);

// Member-wise symmetric difference with c. Distances are translation
// invariant, so the image validates against exactly the same specs.
Family translate(const Family& f, const Subset& c);

}  // namespace kleitman
