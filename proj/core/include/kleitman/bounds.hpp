#pragma once

#include <cstdint>
#include <vector>

#include "kleitman/bigint.hpp"
#include "kleitman/certificate.hpp"
#include "kleitman/distance_spec.hpp"

namespace kleitman::bounds {

// Exact optimum for the full interval D = {1, ..., d}:
// 2^n when d >= n; sum_{i<=t} C(n,i) for d = 2t; 2 * sum_{i<=t} C(n-1,i)
// for d = 2t+1.
BigInt kleitman_value(int n, int d);

// |F| <= C(n, |L|) for a k-uniform L-intersecting family. Always valid.
BoundCertificate frankl_wilson_bound(int n, const IntersectionSpec& spec);

// |F| <= prod (n - l_i) / (k - l_i), valid when n >= 2^k k^3.
// Value computed in exact rationals and floored once.
BoundCertificate def_bound(int n, const IntersectionSpec& spec);

// k-uniform family with distances in D: |F| <= prod_{l in D_even} 2n / l,
// valid when n >= 2^k k^3; an all-odd D leaves at most one set.
BoundCertificate uniform_distance_bound(int n, int k, const DistanceSpec& dspec);

// |D| * n^|D_even|. The formula undershoots for very small n, so the
// certificate is only marked valid when the value dominates a certified
// finite-n bound; the value itself is always the formula.
BoundCertificate crude_bound(int n, const DistanceSpec& dspec);

// sum_{i=0}^{2^{lsize-1}} C(n, i): the modular intersection bound for a
// family whose intersections fall in lsize residue classes.
BigInt bfks_bound(int n, int lsize);

// Non-homogeneous AP (common difference d, offset a != 0): 2 when no even
// distance exists (three-set parity identity), otherwise n + 2 via a prime
// power q | d with q not dividing a, fixing all intersections into one
// residue class. The witness (q, modulus, residue) lands in details.
BoundCertificate nonhomog_bound(int n, const DistanceSpec& dspec);

// Leading term of the optimum for D = {sd, ..., td}:
// value(n) ~ c * C(scale * n, exponent) / denom, exponent = |D_even|.
struct LeadingTerm {
  int c = 1;
  BigInt denom = 1;
  int exponent = 0;
  BigRat scale = 1;

  BigRat evaluate(std::int64_t n) const;
};
LeadingTerm asymptotic_leading(int d, int s, int t);

// 1 + sum over layers z in D (z <= n) of the best k=z-uniform bound with
// allowed intersections L_z = (z - D_even/2) cut to non-negatives: the
// translated family is sliced by member size. Always valid.
BoundCertificate layered_bound(int n, const DistanceSpec& dspec);

// kleitman_value as a certificate; valid iff D is exactly {1, ..., max D}.
BoundCertificate kleitman_certificate(int n, const DistanceSpec& dspec);

// Every certificate this module and the spectral module can produce for
// (n, D), in the fixed precedence order used for tie-breaking.
std::vector<BoundCertificate> all_bounds(int n, const DistanceSpec& dspec);

// Minimum over the valid certificates in all_bounds.
BoundCertificate best_upper_bound(int n, const DistanceSpec& dspec);

}  // namespace kleitman::bounds
