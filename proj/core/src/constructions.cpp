#include "kleitman/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "kleitman/errors.hpp"
#include "kleitman/setcore.hpp"

namespace kleitman::constructions {

namespace {

// Families are dense bit vectors, so very large outputs are refused rather
// than silently swapped to disk: members * words(n) capped at ~100 MB.
constexpr std::int64_t kMaxFamilyWords = 12'500'000;
constexpr std::int64_t kPackCandidateCap = 2'000'000;
constexpr int kPackGroundCap = 4096;

void check_footprint(int n, std::int64_t members) {
  std::int64_t words = std::max(1, (n + 63) / 64);
  if (members * words > kMaxFamilyWords)
    throw ResourceLimit("family too large to materialize: " + std::to_string(members) +
                        " sets on ground " + std::to_string(n));
}

Subset subset_from_words(int n, const std::uint64_t* w, int wc) {
  std::vector<int> elems;
  for (int i = 0; i < wc; ++i) {
    std::uint64_t bits = w[i];
    while (bits) {
      elems.push_back(i * 64 + std::countr_zero(bits) + 1);
      bits &= bits - 1;
    }
  }
  return Subset::from_elements(n, elems);
}

void self_check(const ConstructionResult& r) {
  if (r.dist_spec) {
    auto v = validate_family_sampled(r.family, *r.dist_spec);
    if (!v.ok) throw std::logic_error("construction failed self-validation: " + v.detail);
  }
  if (r.inter_spec) {
    auto v = validate_family(r.family, *r.inter_spec);
    if (!v.ok) throw std::logic_error("construction failed self-validation: " + v.detail);
  }
}

// Distinct distances actually realized, as a spec; empty for < 2 members.
std::optional<DistanceSpec> realized_spec(const Family& f) {
  if (f.size() < 2) return std::nullopt;
  return DistanceSpec(distance_set(f));
}

std::int64_t count_combinations(int m, int t) {
  BigInt c = binomial(m, t);
  if (c > kPackCandidateCap)
    throw ResourceLimit("packing candidate count C(" + std::to_string(m) + "," +
                        std::to_string(t) + ") exceeds cap");
  return static_cast<std::int64_t>(c);
}

// All t-subsets of {0..m-1} in lex order, flattened t elements at a time.
std::vector<int> enumerate_combos(int m, int t, std::int64_t count) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(count) * std::max(t, 1));
  if (t == 0) return flat;  // the single empty combo carries no elements
  if (t > m) return flat;   // no t-subsets exist; the successor loop below assumes t <= m
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    flat.insert(flat.end(), idx.begin(), idx.end());
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return flat;
}

struct Arena {
  int wc = 1;
  std::vector<std::uint64_t> words;
  std::size_t count = 0;

  const std::uint64_t* at(std::size_t i) const { return words.data() + i * wc; }
  void push(const std::uint64_t* src) {
    words.insert(words.end(), src, src + wc);
    ++count;
  }
};

int isect_count(const std::uint64_t* a, const std::uint64_t* b, int wc) {
  int c = 0;
  for (int i = 0; i < wc; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

// One greedy pass over the t-subsets of {0..m-1}, kept iff intersections with
// everything already kept stay <= within_c and (optionally) intersections
// with a previous arena stay <= cross_c. within_c = -1 admits one set total.
Arena greedy_pass(int ground_bits, int m, int t, int within_c, const Arena* cross, int cross_c,
                  PackOrder order, std::uint64_t seed) {
  std::int64_t count = count_combinations(m, t);
  std::vector<int> flat = enumerate_combos(m, t, count);

  std::vector<std::int64_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == PackOrder::random) {
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }

  Arena kept;
  kept.wc = std::max(1, (ground_bits + 63) / 64);
  bool within_vac = within_c >= t - 1;             // distinct t-sets always intersect in <= t-1
  bool cross_vac = (cross == nullptr) || cross_c >= t;

  std::vector<std::uint64_t> cand(kept.wc);
  for (std::int64_t pi = 0; pi < count; ++pi) {
    std::int64_t ci = perm[pi];
    std::fill(cand.begin(), cand.end(), 0);
    for (int j = 0; j < t; ++j) {
      int e = flat[ci * t + j];
      cand[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    bool ok = true;
    if (!cross_vac) {
      for (std::size_t i = 0; i < cross->count && ok; ++i) {
        if (isect_count(cand.data(), cross->at(i), kept.wc) > cross_c) ok = false;
      }
    }
    if (ok && !within_vac) {
      for (std::size_t i = 0; i < kept.count && ok; ++i) {
        if (isect_count(cand.data(), kept.at(i), kept.wc) > within_c) ok = false;
      }
    }
    if (ok) kept.push(cand.data());
  }
  return kept;
}

Family arena_to_family(const Arena& a, int ground) {
  check_footprint(ground, static_cast<std::int64_t>(a.count));
  std::vector<Subset> sets;
  sets.reserve(a.count);
  for (std::size_t i = 0; i < a.count; ++i) sets.push_back(subset_from_words(ground, a.at(i), a.wc));
  return Family(ground, std::move(sets));
}

Family blow_family(const Family& f, int g) {
  int big_n = f.ground_size() * g;
  check_footprint(big_n, static_cast<std::int64_t>(f.size()));
  std::vector<Subset> sets;
  sets.reserve(f.size());
  for (const Subset& s : f) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(s.cardinality()) * g);
    for (int e : s.elements()) {
      for (int j = (e - 1) * g + 1; j <= e * g; ++j) elems.push_back(j);
    }
    sets.push_back(Subset::from_elements(big_n, elems));
  }
  return Family(big_n, std::move(sets));
}

Family pad_family(const Family& f, int n) {
  if (f.ground_size() == n) return f;
  if (f.ground_size() > n) throw InvalidInput("cannot shrink ground set");
  check_footprint(n, static_cast<std::int64_t>(f.size()));
  std::vector<Subset> sets;
  sets.reserve(f.size());
  for (const Subset& s : f) sets.push_back(Subset::from_elements(n, s.elements()));
  return Family(n, std::move(sets));
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

BigRat packing_target(int m, int t, int c) {
  BigInt den = binomial(t, c + 1);
  if (den == 0) return 0;
  return BigRat(binomial(m, c + 1), den);
}

}  // namespace

double ConstructionResult::ratio() const {
  if (target == 0) return 1.0;
  return static_cast<double>(BigRat(achieved()) / target);
}

ConstructionResult hamming_ball_family(int n, int d) {
  if (n < 1 || d < 1) throw InvalidInput("hamming_ball_family: n >= 1, d >= 1 required");
  int t = d / 2;
  BigInt size_target;
  std::vector<Subset> sets;

  if (d >= n) {
    // no pair of subsets is further than n apart, so the whole cube works
    if (n > 24) throw ResourceLimit("full power set too large at n = " + std::to_string(n));
    size_target = BigInt(1) << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      sets.push_back(Subset::from_word(n, mask));
  } else {
    size_target = 0;
    if (d % 2 == 0) {
      for (int i = 0; i <= t; ++i) size_target += binomial(n, i);
    } else {
      for (int i = 0; i <= t; ++i) size_target += 2 * binomial(n - 1, i);
    }
    check_footprint(n, static_cast<std::int64_t>(size_target));
    // radius-t ball
    for (int k = 0; k <= t; ++k) {
      std::int64_t cnt = count_combinations(n, k);
      std::vector<int> flat = enumerate_combos(n, k, cnt);
      for (std::int64_t i = 0; i < cnt; ++i) {
        std::vector<int> elems(flat.begin() + i * k, flat.begin() + (i + 1) * k);
        for (int& e : elems) ++e;
        sets.push_back(Subset::from_elements(n, elems));
      }
    }
    if (d % 2 == 1 && t + 1 <= n) {
      // odd radius: additionally the (t+1)-sets through element 1
      std::int64_t cnt = count_combinations(n - 1, t);
      std::vector<int> flat = enumerate_combos(n - 1, t, cnt);
      for (std::int64_t i = 0; i < cnt; ++i) {
        std::vector<int> elems = {1};
        for (int j = 0; j < t; ++j) elems.push_back(flat[i * t + j] + 2);
        sets.push_back(Subset::from_elements(n, elems));
      }
    }
  }

  ConstructionResult r{"hamming_ball", Family(n, std::move(sets)), BigRat(size_target)};
  if (r.family.size() >= 2) {
    std::vector<int> full(std::min(d, n));
    std::iota(full.begin(), full.end(), 1);
    r.dist_spec = DistanceSpec(full);
  }
  self_check(r);
  return r;
}

ConstructionResult parity_family(int n, int t) {
  if (n < 1 || t < 0 || t > n) throw InvalidInput("parity_family: 0 <= t <= n required");
  BigInt size_target = 0;
  for (int i = t % 2; i <= t; i += 2) size_target += binomial(n, i);
  check_footprint(n, static_cast<std::int64_t>(size_target));

  std::vector<Subset> sets;
  for (int k = t % 2; k <= t; k += 2) {
    std::int64_t cnt = count_combinations(n, k);
    std::vector<int> flat = enumerate_combos(n, k, cnt);
    for (std::int64_t i = 0; i < cnt; ++i) {
      std::vector<int> elems(flat.begin() + i * k, flat.begin() + (i + 1) * k);
      for (int& e : elems) ++e;
      sets.push_back(Subset::from_elements(n, elems));
    }
  }
  ConstructionResult r{"parity", Family(n, std::move(sets)), BigRat(size_target)};
  if (t >= 1 && r.family.size() >= 2) {
    std::vector<int> evens;
    for (int v = 2; v <= 2 * t; v += 2) evens.push_back(v);
    r.dist_spec = DistanceSpec(evens);
  }
  self_check(r);
  return r;
}

ConstructionResult blowup(const Family& f, int g) {
  if (g < 1) throw InvalidInput("blowup: g >= 1 required");
  if (static_cast<std::int64_t>(f.ground_size()) * g > 1'000'000)
    throw InvalidInput("blowup: ground size n*g exceeds 1e6");
  Family blown = blow_family(f, g);
  ConstructionResult r{"blowup", blown, BigRat(static_cast<std::int64_t>(f.size()))};
  r.dist_spec = realized_spec(blown);
  self_check(r);
  return r;
}

ConstructionResult greedy_packing(int m, int t, int c, PackOrder order, std::uint64_t seed) {
  if (!(2 <= t && t <= m)) throw InvalidInput("greedy_packing: 2 <= t <= m required");
  if (!(0 <= c && c < t)) throw InvalidInput("greedy_packing: 0 <= c < t required");
  if (m > kPackGroundCap) throw ResourceLimit("greedy_packing: m exceeds cap");

  Arena kept = greedy_pass(m, m, t, c, nullptr, 0, order, seed);
  ConstructionResult r{"greedy_packing", arena_to_family(kept, m), packing_target(m, t, c)};
  {
    std::vector<int> l(c + 1);
    std::iota(l.begin(), l.end(), 0);
    r.inter_spec.emplace(l, t);
  }
  r.notes["order"] = order == PackOrder::lex ? "lex" : "random";
  self_check(r);
  return r;
}

ConstructionResult double_packing(int m, int t, int s, PackOrder order, std::uint64_t seed) {
  if (!(1 <= t && t <= m)) throw InvalidInput("double_packing: 1 <= t <= m required");
  if (!(1 <= s && s <= t + 1)) throw InvalidInput("double_packing: 1 <= s <= t+1 required");
  if (m > kPackGroundCap) throw ResourceLimit("double_packing: m exceeds cap");

  Arena f1 = greedy_pass(m, m, t, t - s, nullptr, 0, order, seed);
  Arena f2 = greedy_pass(m, m, t, t - s, &f1, t - s + 1, order, seed + 1);

  Family fam(m);
  std::size_t shared = 0;
  for (std::size_t i = 0; i < f1.count; ++i) fam.insert(subset_from_words(m, f1.at(i), f1.wc));
  for (std::size_t i = 0; i < f2.count; ++i) {
    if (!fam.insert(subset_from_words(m, f2.at(i), f2.wc))) ++shared;
  }

  BigRat target = 2 * packing_target(m, t, t - s);
  ConstructionResult r{"double_packing", fam, target};
  r.dist_spec = realized_spec(fam);
  r.notes["f1_size"] = std::to_string(f1.count);
  r.notes["f2_size"] = std::to_string(f2.count);
  r.notes["disjoint"] = shared == 0 ? "true" : "false";
  self_check(r);
  return r;
}

ConstructionResult homogeneous_construction(int n, int d, int s, int t) {
  if (d < 1 || s < 1 || s > t) throw InvalidInput("homogeneous_construction: d >= 1, 1 <= s <= t required");
  DistanceSpec dspec = DistanceSpec::ap(d, s, t, 0);

  Family out(1);
  BigRat target = 0;
  if ((static_cast<std::int64_t>(d) * s * t) % 2 == 0) {
    int m, tp, cp, g;
    if (d % 2 == 0) {
      m = static_cast<int>((2LL * n) / d);
      tp = t;
      cp = t - s;
      g = d / 2;
    } else {
      m = n / d;
      tp = t / 2;
      cp = t / 2 - (s + 1) / 2;
      g = d;
    }
    if (m < 1) throw InvalidInput("homogeneous_construction: n too small for one block");
    if (m > kPackGroundCap) throw ResourceLimit("homogeneous_construction: packing ground exceeds cap");
    Arena pack = greedy_pass(m, m, tp, cp, nullptr, 0, PackOrder::lex, 0);
    out = pad_family(blow_family(arena_to_family(pack, m), g), n);
    target = packing_target(m, tp, cp);
  } else {
    // d, s, t all odd: two packings, the second shifted off by a fresh element
    int m = n / d - 1;
    if (m < 0) throw InvalidInput("homogeneous_construction: n too small for one block");
    if (m > kPackGroundCap) throw ResourceLimit("homogeneous_construction: packing ground exceeds cap");
    int tp = t / 2;
    int sp = (s + 1) / 2;
    Arena f1 = greedy_pass(m + 1, m, tp, tp - sp, nullptr, 0, PackOrder::lex, 0);
    Arena f2 = greedy_pass(m + 1, m, tp, tp - sp, &f1, tp - sp + 1, PackOrder::lex, 0);
    Family fam(m + 1);
    for (std::size_t i = 0; i < f1.count; ++i)
      fam.insert(subset_from_words(m + 1, f1.at(i), f1.wc));
    for (std::size_t i = 0; i < f2.count; ++i)
      fam.insert(subset_from_words(m + 1, f2.at(i), f2.wc).with(m + 1));
    out = pad_family(blow_family(fam, d), n);
    target = 2 * packing_target(m, tp, tp - sp);
  }

  ConstructionResult r{"homogeneous", out, target};
  if (out.size() >= 2) r.dist_spec = dspec;
  self_check(r);
  return r;
}

ConstructionResult disjoint_blocks(int n, int u) {
  if (n < 1 || u < 1) throw InvalidInput("disjoint_blocks: n >= 1, u >= 1 required");
  int count = n / u;
  check_footprint(n, count);
  std::vector<Subset> sets;
  for (int i = 0; i < count; ++i) {
    std::vector<int> elems(u);
    std::iota(elems.begin(), elems.end(), i * u + 1);
    sets.push_back(Subset::from_elements(n, elems));
  }
  ConstructionResult r{"disjoint_blocks", Family(n, std::move(sets)), BigRat(count)};
  if (count >= 2) {
    r.dist_spec = DistanceSpec({2 * u});
    r.inter_spec.emplace(std::vector<int>{0}, u);
  }
  self_check(r);
  return r;
}

ConstructionResult zero_three_family(int n) {
  if (n < 9) throw InvalidInput("zero_three_family: n >= 9 required");
  static constexpr int kBase[5][5] = {
      {1, 2, 3, 4, 5}, {1, 2, 3, 6, 7}, {1, 2, 3, 8, 9}, {1, 2, 4, 6, 8}, {1, 3, 4, 6, 9}};
  int groups = n / 9;
  check_footprint(n, 5LL * groups);
  std::vector<Subset> sets;
  for (int i = 0; i < groups; ++i) {
    for (const auto& block : kBase) {
      std::vector<int> elems;
      for (int e : block) elems.push_back(9 * i + e);
      sets.push_back(Subset::from_elements(n, elems));
    }
  }
  ConstructionResult r{"zero_three", Family(n, std::move(sets)), BigRat(5LL * groups)};
  if (r.family.size() >= 2) {
    r.dist_spec = DistanceSpec(groups > 1 ? std::vector<int>{4, 10} : std::vector<int>{4});
    r.inter_spec.emplace(groups > 1 ? std::vector<int>{0, 3} : std::vector<int>{3}, 5);
  }
  self_check(r);
  return r;
}

ConstructionResult projective_plane_family(int q, int p, int r) {
  if (!is_prime(q)) throw InvalidInput("projective_plane_family: q must be prime");
  if (!is_prime(p) || p == 2) throw InvalidInput("projective_plane_family: p must be an odd prime");
  if (r % p == 0) throw InvalidInput("projective_plane_family: p must not divide r");
  if ((q - r) % p != 0) throw InvalidInput("projective_plane_family: q = r (mod p) required");

  // normalized homogeneous coordinates: (1,y,z), (0,1,z), (0,0,1)
  std::vector<std::array<int, 3>> pts;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  int np = static_cast<int>(pts.size());  // q^2 + q + 1

  int ground = np + (p - 1);
  check_footprint(ground, np);
  std::vector<int> dummies;
  for (int i = np + 1; i <= ground; ++i) dummies.push_back(i);

  std::vector<Subset> sets;
  for (const auto& line : pts) {  // lines share the same normalized enumeration
    std::vector<int> elems = dummies;
    for (int i = 0; i < np; ++i) {
      int dot = line[0] * pts[i][0] + line[1] * pts[i][1] + line[2] * pts[i][2];
      if (dot % q == 0) elems.push_back(i + 1);
    }
    if (static_cast<int>(elems.size()) != q + p)
      throw std::logic_error("projective plane: line of wrong size");
    sets.push_back(Subset::from_elements(ground, elems));
  }

  ConstructionResult r2{"projective_plane", Family(ground, std::move(sets)),
                        BigRat(static_cast<std::int64_t>(np))};
  r2.inter_spec.emplace(std::vector<int>{p}, q + p);
  r2.dist_spec = DistanceSpec({2 * q});
  r2.notes["points"] = std::to_string(np);
  r2.notes["dummy_points"] = std::to_string(p - 1);
  self_check(r2);
  return r2;
}

ConstructionResult best_construction(int n, const DistanceSpec& dspec) {
  std::vector<ConstructionResult> cands;

  {  // one-member fallback, always valid
    ConstructionResult r{"trivial", Family(n, {Subset(n)}), BigRat(1)};
    cands.push_back(std::move(r));
  }
  int kmin = 0;
  for (int v : dspec.distances()) {
    if (v <= n) {
      kmin = v;
      break;
    }
  }
  if (kmin > 0) {
    std::vector<int> pre(kmin);
    std::iota(pre.begin(), pre.end(), 1);
    ConstructionResult r{"pair", Family(n, {Subset(n), Subset::from_elements(n, pre)}), BigRat(2)};
    r.dist_spec = DistanceSpec({kmin});
    cands.push_back(std::move(r));
  }

  auto try_push = [&](auto&& make) {
    try {
      cands.push_back(make());
    } catch (const InvalidInput&) {
    } catch (const ResourceLimit&) {
    }
  };

  if (!dspec.even_part().empty() && dspec.even_part().front() / 2 <= n) {
    try_push([&] { return disjoint_blocks(n, dspec.even_part().front() / 2); });
  }
  bool interval = true;
  for (int i = 0; i < static_cast<int>(dspec.distances().size()); ++i) {
    if (dspec.distances()[i] != i + 1) interval = false;
  }
  if (interval) try_push([&] { return hamming_ball_family(n, dspec.max()); });
  {
    int t = dspec.max() / 2;
    bool evens_present = t >= 1;
    for (int v = 2; v <= 2 * t; v += 2) {
      if (!dspec.contains(v)) evens_present = false;
    }
    if (evens_present) try_push([&] { return parity_family(n, t); });
  }
  if (dspec.homogeneous_ap()) {
    const ApForm& ap = *dspec.ap_form();
    try_push([&] { return homogeneous_construction(n, ap.d, ap.s, ap.t); });
  }
  if (dspec.contains(4) && dspec.contains(10) && n >= 9) {
    try_push([&] { return zero_three_family(n); });
  }

  // keep only candidates whose realized distances fit the requested spec
  ConstructionResult* best = nullptr;
  for (auto& c : cands) {
    bool fits = true;
    if (c.family.size() >= 2) {
      fits = validate_family_sampled(c.family, dspec).ok;
    }
    if (fits && (!best || c.achieved() > best->achieved())) best = &c;
  }
  ConstructionResult out = *best;  // the one-member fallback always survives
  out.dist_spec = dspec;
  return out;
}

}  // namespace kleitman::constructions
