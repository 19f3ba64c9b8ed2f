#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace kleitman::clique {

// undirected graph on vertices 0..n-1 with bit-packed adjacency rows
class Graph {
 public:
  explicit Graph(int n);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  int words() const { return words_; }

  Graph induced(const std::vector<int>& vertices) const;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

struct CliqueOptions {
  std::optional<double> time_budget;  // seconds; empty means run to completion
  int thread_count = 1;
  std::uint64_t node_cap = 0;  // 0 means unlimited
  int initial_bound = 0;       // only cliques larger than this are reported
};

struct CliqueResult {
  std::vector<int> best;        // largest clique found beating initial_bound; may be empty
  bool optimal = true;          // false if a budget cut the search short
  std::uint64_t nodes = 0;      // branch-and-bound nodes explored
};

// exact maximum clique via branch and bound with greedy-coloring upper bounds
CliqueResult max_clique(const Graph& g, const CliqueOptions& opts = {});

}  // namespace kleitman::clique
