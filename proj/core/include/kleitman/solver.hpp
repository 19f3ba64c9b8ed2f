#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleitman/distance_spec.hpp"
#include "kleitman/family.hpp"

namespace kleitman::solver {

struct SolveOptions {
  std::optional<double> time_budget;  // seconds
  int thread_count = 1;
  bool prove_optimal = true;  // false: heuristic pass only, no search-tree exhaustion
  std::uint64_t seed = 0;     // randomized ordering in the heuristic paths
};

struct SolveResult {
  explicit SolveResult(int n) : best_family(n) {}

  Family best_family;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;
  std::vector<std::string> warnings;
};

// exact optimum: the largest family on {1..n} whose pairwise symmetric
// difference sizes all lie in the distance set; n <= 62
SolveResult max_family(int n, const DistanceSpec& dspec, const SolveOptions& opts = {});

// exact optimum for k-uniform families with all pairwise intersection sizes
// in the allowed list; n <= 62, k must match l.uniformity
SolveResult max_uniform_L_intersecting(int n, int k, const IntersectionSpec& l,
                                       const SolveOptions& opts = {});

// randomized greedy family, seeded from the constructions; always valid,
// no optimality claim
Family heuristic_lower(int n, const DistanceSpec& dspec, std::uint64_t seed = 0);

}  // namespace kleitman::solver
