#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kleitman/bigint.hpp"
#include "kleitman/certificate.hpp"
#include "kleitman/distance_spec.hpp"

namespace kleitman::spectral {

// The 2^{n-1} even-cardinality subsets of [n], indexed in increasing mask
// order (bit i-1 of a mask is element i). All matrices below live on this
// vertex set.
class EvenCube {
 public:
  explicit EvenCube(int n);  // 2 <= n <= 16

  int n() const { return n_; }
  std::size_t dim() const { return masks_.size(); }
  std::uint32_t mask(std::size_t idx) const { return masks_[idx]; }
  std::size_t index(std::uint32_t m) const;  // throws on odd-cardinality masks

 private:
  int n_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> pos_;
};

// Square 0/1 matrix with bit-vector rows.
struct BitMatrix {
  std::size_t dim = 0;
  int words_per_row = 0;
  std::vector<std::uint64_t> bits;

  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words_per_row; }
  bool get(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }
  std::size_t row_weight(std::size_t i) const;
};

// Distance-2k adjacency on the even cube: entry (X, Y) = 1 iff |X ^ Y| = 2k.
BitMatrix build_Mk(int n, int k);

// Character vector (chi_S)_X = (-1)^{|X intersect S|}, entries +-1.
std::vector<int> chi_vector(const EvenCube& cube, std::uint32_t s_mask);

// Eigenvalue of M_k on chi_S with |S| = s:
// sum_{i=0}^{s} (-1)^i C(s, i) C(n-s, 2k-i).
BigInt mk_eigenvalue(int n, int k, int s);

// Eigenvalue of M = sum_{k >= t+1} C(k-1, t) M_k on chi_S with |S| = s.
// When n >= 2t+2 the computed sign is checked against sign_class.
BigInt big_m_eigenvalue(int n, int t, int s);

// Sign (+1/-1) of the M-eigenvalue for |S| = s: positive at s = 0 and s = n,
// (-1)^s for 1 <= s <= t, (-1)^{t+1} in the middle range, (-1)^{n-s} for
// n-t <= s <= n-1. Requires n >= 2t+2.
int sign_class(int n, int t, int s);

struct SpectrumClass {
  int size = 0;  // representative |S|, 0..floor(n/2)
  BigInt eigenvalue = 0;
  BigInt multiplicity = 0;
  int sign = 0;  // sign of the eigenvalue: -1, 0, +1
};

struct SpectrumReport {
  int n = 0;
  int t = 0;
  std::vector<SpectrumClass> classes;
  BigInt n_ge0 = 0;  // eigenvalues >= 0, with multiplicity
  BigInt n_le0 = 0;  // eigenvalues <= 0, with multiplicity
  BigInt bound = 0;  // min of the two
};

// Eigenvalue-sign count bound for independent sets of the "distance > 2t"
// graph on the even cube: any family with all pairwise distances in
// {2, ..., 2t} has size at most min(n_ge0, n_le0), which collapses to
// sum of C(n, i) over i <= t with i = t (mod 2). Requires n >= 2t+2.
SpectrumReport cvetkovic_bound(int n, int t);

struct VerifyReport {
  bool pass = true;
  int first_bad_size = -1;
  std::string detail;
};

// Recomputes M * chi_S exactly for one representative S of every size and
// compares against the closed-form eigenvalue; checks orthogonality of the
// representatives (all 2^n characters when n <= 6). n <= 14. The eigenvalue
// source is injectable so a corrupted table is detected by tests.
VerifyReport verify_spectrum(int n, int t, BigInt (*eigenvalue)(int, int, int) = nullptr);

// Wraps cvetkovic_bound for a distance set: valid iff every distance is even
// and n >= max(D) + 2. Outside that regime the value falls back to a trivial
// bound and the certificate is flagged invalid.
BoundCertificate spectral_bound_for_D(int n, const DistanceSpec& dspec);

}  // namespace kleitman::spectral
