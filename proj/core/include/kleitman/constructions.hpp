#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kleitman/bigint.hpp"
#include "kleitman/distance_spec.hpp"
#include "kleitman/family.hpp"

namespace kleitman::constructions {

enum class PackOrder { lex, random };

// Output of one constructor: the family, the benchmark target size it chases
// (exact rational), and the distance set it was checked against. Every constructor
// self-validates before returning (exhaustively for moderate sizes, by seeded
// pair sampling for very large outputs).
struct ConstructionResult {
  std::string kind;
  Family family;
  BigRat target = 0;
  std::optional<DistanceSpec> dist_spec;          // absent when < 2 members
  std::optional<IntersectionSpec> inter_spec;  // for intersection-flavored outputs
  std::map<std::string, std::string> notes;

  std::int64_t achieved() const { return static_cast<std::int64_t>(family.size()); }
  double ratio() const;  // achieved / target; 1.0 when target is 0
};

// Distance-[1..d] optimum: radius-floor(d/2) ball, plus (for odd d) the
// (t+1)-sets through element 1, plus (for d >= n) the whole power set.
// Size equals the interval closed form.
ConstructionResult hamming_ball_family(int n, int d);

// All |A| <= t with |A| = t (mod 2); distances even, between 2 and 2t.
ConstructionResult parity_family(int n, int t);

// Element i becomes the block {(i-1)g+1, ..., ig} on ground n*g; every
// pairwise distance scales by exactly g.
ConstructionResult blowup(const Family& f, int g);

// Greedy maximal packing: t-subsets of [m], pairwise intersections <= c,
// scanned in lex or seeded-random order. Maximal by construction; chases
// the packing target C(m, c+1) / C(t, c+1).
ConstructionResult greedy_packing(int m, int t, int c, PackOrder order = PackOrder::lex,
                                  std::uint64_t seed = 0);

// Two sequenced greedy passes: F1 with within-intersections <= t-s, then F2
// with within-intersections <= t-s and cross-intersections (vs F1) <= t-s+1.
// Returns the concatenated pair; notes record the two sizes and whether the
// passes happened to be disjoint. 1 <= s <= t+1.
ConstructionResult double_packing(int m, int t, int s, PackOrder order = PackOrder::lex,
                                  std::uint64_t seed = 0);

// Lower-bound pipeline for D = {sd, ..., td}: packing + blowup when d*s*t is
// even, the two-pass packing with an appended fresh element when d, s, t are
// all odd. Output on ground [n], validated against D.
ConstructionResult homogeneous_construction(int n, int d, int s, int t);

// floor(n/u) pairwise disjoint u-blocks.
ConstructionResult disjoint_blocks(int n, int u);

// 5*floor(n/9) five-element sets, {0,3}-intersecting, distances {4, 10}.
ConstructionResult zero_three_family(int n);

// Lines of the projective plane over F_q (q prime), each extended by the
// same p-1 fresh points: q^2+q+1 sets of size q+p with all pairwise
// intersections exactly p. Requires q = r (mod p), p an odd prime not
// dividing r.
ConstructionResult projective_plane_family(int q, int p, int r);

// Best validated construction for (n, D) among the applicable ones above
// (plus the one- and two-member fallbacks). Used by sweeps.
ConstructionResult best_construction(int n, const DistanceSpec& dspec);

}  // namespace kleitman::constructions
