#include "kleitman/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kleitman/bigint.hpp"
#include "kleitman/clique.hpp"
#include "kleitman/constructions.hpp"
#include "kleitman/errors.hpp"
#include "kleitman/setcore.hpp"

namespace kleitman::solver {

namespace {

constexpr int kMaxExactGround = 62;
constexpr std::int64_t kVertexCap = 50000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_exact_pre(int n, const SolveOptions& opts, const char* who) {
  if (n < 1) throw InvalidInput(std::string(who) + ": n >= 1 required");
  if (n > kMaxExactGround)
    throw InvalidInput(std::string(who) + ": exact mode supports n <= " +
                       std::to_string(kMaxExactGround));
  if (opts.thread_count < 1) throw InvalidInput("thread_count must be positive");
}

// every way to OR together `choose` distinct bits out of positions
// lo..lo+width-1, in lexicographic index order
template <typename F>
void for_each_mask(int lo, int width, int choose, F&& fn) {
  if (choose == 0) {
    fn(std::uint64_t{0});
    return;
  }
  if (choose > width) return;
  std::vector<int> idx(choose);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t m = 0;
    for (int b : idx) m |= std::uint64_t{1} << (lo + b);
    fn(m);
    int i = choose - 1;
    while (i >= 0 && idx[i] == width - choose + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < choose; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<double> remaining_budget(const std::optional<Clock::time_point>& deadline) {
  if (!deadline) return std::nullopt;
  return std::chrono::duration<double>(*deadline - Clock::now()).count();
}

}  // namespace

SolveResult max_family(int n, const DistanceSpec& dspec, const SolveOptions& opts) {
  auto t0 = Clock::now();
  check_exact_pre(n, opts, "max_family");

  SolveResult res(n);
  std::vector<int> usable;
  for (int d : dspec.distances()) {
    if (d > n) {
      res.warnings.push_back("distance " + std::to_string(d) + " exceeds ground size " +
                             std::to_string(n) + " and was dropped");
    } else {
      usable.push_back(d);
    }
  }

  if (!opts.prove_optimal) {
    res.best_family = heuristic_lower(n, dspec, opts.seed);
    res.optimal = false;
    res.wall_time = seconds_since(t0);
    return res;
  }

  std::vector<char> allowed(n + 1, 0);
  for (int d : usable) allowed[d] = 1;

  res.best_family.insert(Subset(n));  // translation fixes the empty set
  int best_size = 1;
  std::vector<std::uint64_t> best_masks;

  std::optional<Clock::time_point> deadline;
  if (opts.time_budget) {
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(*opts.time_budget));
  }
  bool truncated = false;

  // branch on the size k of the first non-empty member, mapped to {1..k}
  for (int k : usable) {
    std::uint64_t pmask = (std::uint64_t{1} << k) - 1;

    BigInt cnt = 0;
    for (int j : usable) {
      if (j < k) continue;
      for (int i = 0; i <= std::min(k, j); ++i) {
        if (j - i > n - k) continue;
        int dd = k + j - 2 * i;
        if (dd >= 1 && dd <= n && allowed[dd]) cnt += binomial(k, i) * binomial(n - k, j - i);
      }
    }
    if (cnt > kVertexCap) {
      throw ResourceLimit("candidate graph for prefix size " + std::to_string(k) + " has " +
                          to_decimal(cnt) + " vertices (limit " + std::to_string(kVertexCap) +
                          ")");
    }
    if (cnt == 0) {
      if (best_size < 2) {
        best_size = 2;
        best_masks.assign(1, pmask);
      }
      continue;
    }

    auto left = remaining_budget(deadline);
    if (left && *left <= 0) {
      truncated = true;
      break;
    }

    std::vector<std::uint64_t> cand;
    cand.reserve(static_cast<std::size_t>(cnt));
    for (int j : usable) {
      if (j < k) continue;
      for (int i = 0; i <= std::min(k, j); ++i) {
        if (j - i > n - k) continue;
        int dd = k + j - 2 * i;
        if (!(dd >= 1 && dd <= n && allowed[dd])) continue;
        for_each_mask(0, k, i, [&](std::uint64_t s) {
          for_each_mask(k, n - k, j - i, [&](std::uint64_t t) { cand.push_back(s | t); });
        });
      }
    }

    clique::Graph g(static_cast<int>(cand.size()));
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        int dd = std::popcount(cand[a] ^ cand[b]);
        if (allowed[dd]) g.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }

    clique::CliqueOptions copts;
    copts.thread_count = opts.thread_count;
    copts.initial_bound = std::max(0, best_size - 2);
    copts.time_budget = left;
    clique::CliqueResult cres = clique::max_clique(g, copts);
    res.nodes_explored += cres.nodes;
    if (!cres.optimal) truncated = true;
    if (!cres.best.empty() && static_cast<int>(cres.best.size()) + 2 > best_size) {
      best_size = static_cast<int>(cres.best.size()) + 2;
      best_masks.assign(1, pmask);
      for (int v : cres.best) best_masks.push_back(cand[v]);
    }
  }

  for (std::uint64_t m : best_masks) res.best_family.insert(Subset::from_word(n, m));
  res.optimal = !truncated;

  ValidationResult vr = validate_family_sampled(res.best_family, dspec);
  if (!vr.ok) throw std::logic_error("solver produced an invalid family: " + vr.detail);
  if (static_cast<int>(res.best_family.size()) != best_size)
    throw std::logic_error("solver witness size mismatch");

  res.wall_time = seconds_since(t0);
  return res;
}

SolveResult max_uniform_L_intersecting(int n, int k, const IntersectionSpec& l,
                                       const SolveOptions& opts) {
  auto t0 = Clock::now();
  check_exact_pre(n, opts, "max_uniform_L_intersecting");
  if (k != l.uniformity) throw InvalidInput("uniformity argument disagrees with the intersection list");
  if (k > n) throw InvalidInput("uniformity exceeds ground size");

  SolveResult res(n);
  std::uint64_t pmask = (std::uint64_t{1} << k) - 1;

  BigInt cnt = 0;
  for (int i : l.sizes) {
    if (k - i <= n - k) cnt += binomial(k, i) * binomial(n - k, k - i);
  }
  if (cnt > kVertexCap) {
    throw ResourceLimit("candidate graph has " + to_decimal(cnt) + " vertices (limit " +
                        std::to_string(kVertexCap) + ")");
  }

  std::vector<std::uint64_t> cand;
  cand.reserve(static_cast<std::size_t>(cnt));
  for (int i : l.sizes) {
    if (k - i > n - k) continue;
    for_each_mask(0, k, i, [&](std::uint64_t s) {
      for_each_mask(k, n - k, k - i, [&](std::uint64_t t) { cand.push_back(s | t); });
    });
  }

  std::vector<char> inter_ok(k + 1, 0);
  for (int i : l.sizes) inter_ok[i] = 1;

  res.best_family.insert(Subset::from_word(n, pmask));

  if (!opts.prove_optimal) {
    // first-fit pass over the candidates in enumeration order
    std::vector<std::uint64_t> kept;
    for (std::uint64_t c : cand) {
      bool ok = true;
      for (std::uint64_t m : kept) {
        if (!inter_ok[std::popcount(c & m)]) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(c);
    }
    for (std::uint64_t m : kept) res.best_family.insert(Subset::from_word(n, m));
    res.optimal = false;
    res.wall_time = seconds_since(t0);
    return res;
  }

  clique::Graph g(static_cast<int>(cand.size()));
  for (std::size_t a = 0; a < cand.size(); ++a) {
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      if (inter_ok[std::popcount(cand[a] & cand[b])])
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }

  clique::CliqueOptions copts;
  copts.thread_count = opts.thread_count;
  copts.time_budget = opts.time_budget;
  clique::CliqueResult cres = clique::max_clique(g, copts);
  res.nodes_explored = cres.nodes;
  res.optimal = cres.optimal;
  for (int v : cres.best) res.best_family.insert(Subset::from_word(n, cand[v]));

  if (res.best_family.size() <= 3000) {
    ValidationResult vr = validate_family(res.best_family, l);
    if (!vr.ok) throw std::logic_error("solver produced an invalid family: " + vr.detail);
  }

  res.wall_time = seconds_since(t0);
  return res;
}

Family heuristic_lower(int n, const DistanceSpec& dspec, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("heuristic_lower: n >= 1 required");

  constructions::ConstructionResult base = constructions::best_construction(n, dspec);
  std::vector<Subset> mem = base.family.sets();
  std::vector<Subset> snapshot = mem;

  std::vector<int> usable;
  std::vector<char> allowed(n + 1, 0);
  for (int d : dspec.distances()) {
    if (d <= n) {
      usable.push_back(d);
      allowed[d] = 1;
    }
  }

  if (!usable.empty() && !mem.empty()) {
    std::mt19937_64 rng(seed);
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    std::vector<int> flip;

    auto compatible = [&](const Subset& b) {
      for (const Subset& m : mem) {
        int dd = distance(b, m);
        if (dd == 0 || dd > n || !allowed[dd]) return false;
      }
      return true;
    };

    int attempts = 2000 + 200 * std::min(n, 200);
    int stale = 0;
    for (int it = 0; it < attempts; ++it) {
      const Subset& a = mem[rng() % mem.size()];
      int z = usable[rng() % usable.size()];
      flip.clear();
      std::sample(ground.begin(), ground.end(), std::back_inserter(flip), z, rng);
      Subset b = a.sym_diff(Subset::from_elements(n, flip));
      if (compatible(b)) {
        mem.push_back(b);
        stale = 0;
        if (mem.size() > snapshot.size()) snapshot = mem;
      } else if (++stale >= 500 && mem.size() > 1) {
        // plateau: drop a random member and keep trying from the smaller family
        mem.erase(mem.begin() + static_cast<std::ptrdiff_t>(rng() % mem.size()));
        stale = 0;
      }
    }
  }

  Family out(n, snapshot);
  ValidationResult vr = validate_family_sampled(out, dspec);
  if (!vr.ok) throw std::logic_error("heuristic produced an invalid family: " + vr.detail);
  return out;
}

}  // namespace kleitman::solver
