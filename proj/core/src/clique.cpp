#include "kleitman/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "kleitman/errors.hpp"

namespace kleitman::clique {

namespace {

constexpr int kMaxVertices = 50000;
constexpr std::uint64_t kTickMask = 1023;

inline int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0 || n > kMaxVertices) throw ResourceLimit("clique graph too large");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= (std::uint64_t{1} << (v & 63));
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= (std::uint64_t{1} << (u & 63));
}

bool Graph::adjacent(int u, int v) const {
  return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

int Graph::degree(int v) const { return popcount_words(row(v), words_); }

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

namespace {

// reverse removal order of iterated min-degree peeling: every vertex has at
// most degeneracy-many neighbours before it
std::vector<int> degeneracy_order(const Graph& g) {
  int n = g.size();
  std::vector<int> deg(n);
  int maxd = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxd = std::max(maxd, deg[v]);
  }
  std::vector<std::vector<int>> bins(maxd + 1);
  for (int v = 0; v < n; ++v) bins[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<int> removal;
  removal.reserve(n);
  int cur = 0;
  while (static_cast<int>(removal.size()) < n) {
    while (cur <= maxd && bins[cur].empty()) ++cur;
    int v = bins[cur].back();
    bins[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;  // stale entry
    removed[v] = 1;
    removal.push_back(v);
    const std::uint64_t* row = g.row(v);
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int u = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (!removed[u]) {
          bins[--deg[u]].push_back(u);
        }
      }
    }
    if (cur > 0) --cur;
  }
  std::vector<int> order(removal.rbegin(), removal.rend());
  return order;
}

struct Shared {
  std::atomic<int> best_size{0};
  std::vector<int> best;
  std::mutex best_mutex;
  std::atomic<bool> stop{false};
  std::atomic<bool> truncated{false};
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t node_cap = 0;
};

struct Searcher {
  const Graph& g;
  Shared& sh;
  int words;
  std::uint64_t local_nodes = 0;
  std::vector<int> rstack;
  // per-depth scratch, grown lazily
  std::vector<std::vector<std::uint64_t>> child_buf, color_buf, queue_buf, live_buf;
  std::vector<std::vector<int>> order_buf, col_buf;

  Searcher(const Graph& graph, Shared& shared) : g(graph), sh(shared), words(graph.words()) {}

  void ensure_depth(std::size_t d) {
    while (child_buf.size() <= d) {
      child_buf.emplace_back(words);
      color_buf.emplace_back(words);
      queue_buf.emplace_back(words);
      live_buf.emplace_back(words);
      order_buf.emplace_back(g.size());
      col_buf.emplace_back(g.size());
    }
  }

  void flush_nodes() {
    sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    local_nodes = 0;
  }

  bool tick() {
    ++local_nodes;
    if ((local_nodes & kTickMask) != 0) return sh.stop.load(std::memory_order_relaxed);
    std::uint64_t total = sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes;
    local_nodes = 0;
    if (sh.node_cap && total > sh.node_cap) {
      sh.truncated.store(true);
      sh.stop.store(true);
    }
    if (sh.deadline && std::chrono::steady_clock::now() > *sh.deadline) {
      sh.truncated.store(true);
      sh.stop.store(true);
    }
    return sh.stop.load(std::memory_order_relaxed);
  }

  void record() {
    int sz = static_cast<int>(rstack.size());
    std::lock_guard<std::mutex> lock(sh.best_mutex);
    if (sz > sh.best_size.load(std::memory_order_relaxed)) {
      sh.best = rstack;
      sh.best_size.store(sz, std::memory_order_relaxed);
    }
  }

  void color_sort(const std::uint64_t* p, int pcnt, int* order, int* col) {
    std::size_t d = rstack.size();
    std::uint64_t* uncolored = color_buf[d].data();
    std::uint64_t* q = queue_buf[d].data();
    for (int w = 0; w < words; ++w) uncolored[w] = p[w];
    int colored = 0, color = 0;
    while (colored < pcnt) {
      ++color;
      for (int w = 0; w < words; ++w) q[w] = uncolored[w];
      for (int w = 0; w < words; ++w) {
        while (q[w]) {
          int v = (w << 6) + std::countr_zero(q[w]);
          q[w] &= q[w] - 1;
          uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          const std::uint64_t* row = g.row(v);
          for (int x = w; x < words; ++x) q[x] &= ~row[x];
          order[colored] = v;
          col[colored] = color;
          ++colored;
        }
      }
    }
  }

  void expand(const std::uint64_t* p, int pcnt) {
    if (tick()) return;
    std::size_t d = rstack.size();
    ensure_depth(d);
    int* order = order_buf[d].data();
    int* col = col_buf[d].data();
    color_sort(p, pcnt, order, col);
    std::uint64_t* live = live_buf[d].data();
    for (int w = 0; w < words; ++w) live[w] = p[w];
    for (int idx = pcnt - 1; idx >= 0; --idx) {
      if (sh.stop.load(std::memory_order_relaxed)) return;
      int v = order[idx];
      if (static_cast<int>(d) + col[idx] <= sh.best_size.load(std::memory_order_relaxed)) return;
      std::uint64_t* child = child_buf[d].data();
      const std::uint64_t* row = g.row(v);
      int ccnt = 0;
      for (int w = 0; w < words; ++w) {
        child[w] = live[w] & row[w];
        ccnt += std::popcount(child[w]);
      }
      rstack.push_back(v);
      if (ccnt == 0) {
        if (static_cast<int>(rstack.size()) > sh.best_size.load(std::memory_order_relaxed)) record();
      } else {
        expand(child, ccnt);
      }
      rstack.pop_back();
      live[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  // branch rooted at vertex i with candidates the earlier neighbours of i
  void branch(int i) {
    ensure_depth(0);
    std::vector<std::uint64_t> p(words, 0);
    const std::uint64_t* row = g.row(i);
    for (int w = 0; w < (i >> 6); ++w) p[w] = row[w];
    if (i & 63) p[i >> 6] = row[i >> 6] & ((std::uint64_t{1} << (i & 63)) - 1);
    int pcnt = popcount_words(p.data(), words);
    if (1 + pcnt <= sh.best_size.load(std::memory_order_relaxed)) return;
    rstack.assign(1, i);
    if (pcnt == 0) {
      if (1 > sh.best_size.load(std::memory_order_relaxed)) record();
    } else {
      expand(p.data(), pcnt);
    }
    rstack.clear();
  }
};

}  // namespace

CliqueResult max_clique(const Graph& g, const CliqueOptions& opts) {
  CliqueResult res;
  int n = g.size();
  if (n == 0) return res;

  std::vector<int> order = degeneracy_order(g);
  Graph h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(order[i], order[j])) h.add_edge(i, j);
    }
  }

  Shared sh;
  sh.node_cap = opts.node_cap;
  sh.best_size.store(std::max(0, opts.initial_bound));
  if (opts.time_budget) {
    sh.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*opts.time_budget));
  }

  int threads = std::max(1, opts.thread_count);
  if (threads == 1) {
    Searcher s(h, sh);
    for (int i = 0; i < n && !sh.stop.load(std::memory_order_relaxed); ++i) s.branch(i);
    s.flush_nodes();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&h, &sh, t, threads, n] {
        Searcher s(h, sh);
        for (int i = t; i < n && !sh.stop.load(std::memory_order_relaxed); i += threads) s.branch(i);
        s.flush_nodes();
      });
    }
    for (auto& th : pool) th.join();
  }

  res.optimal = !sh.truncated.load();
  res.nodes = sh.nodes.load();
  res.best.reserve(sh.best.size());
  for (int v : sh.best) res.best.push_back(order[v]);
  std::sort(res.best.begin(), res.best.end());
  return res;
}

}  // namespace kleitman::clique
