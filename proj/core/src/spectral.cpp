#include "kleitman/spectral.hpp"

#include <bit>

#include "kleitman/errors.hpp"

namespace kleitman::spectral {

namespace {

void check_n(int n, int cap, const char* who) {
  if (n < 2 || n > cap)
    throw InvalidInput(std::string(who) + ": need 2 <= n <= " + std::to_string(cap));
}

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

EvenCube::EvenCube(int n) : n_(n) {
  check_n(n, 16, "EvenCube");
  std::uint32_t total = std::uint32_t{1} << n;
  masks_.reserve(std::size_t{1} << (n - 1));
  pos_.assign(total, -1);
  for (std::uint32_t m = 0; m < total; ++m) {
    if (std::popcount(m) % 2 == 0) {
      pos_[m] = static_cast<std::int32_t>(masks_.size());
      masks_.push_back(m);
    }
  }
}

std::size_t EvenCube::index(std::uint32_t m) const {
  if (m >= pos_.size() || pos_[m] < 0) throw InvalidInput("EvenCube::index: not an even-cardinality mask");
  return static_cast<std::size_t>(pos_[m]);
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
  std::size_t c = 0;
  const std::uint64_t* r = row(i);
  for (int w = 0; w < words_per_row; ++w) c += std::popcount(r[w]);
  return c;
}

BitMatrix build_Mk(int n, int k) {
  check_n(n, 16, "build_Mk");
  if (k < 0) throw InvalidInput("build_Mk: k >= 0 required");
  EvenCube cube(n);
  BitMatrix m;
  m.dim = cube.dim();
  m.words_per_row = static_cast<int>((m.dim + 63) / 64);
  m.bits.assign(m.dim * m.words_per_row, 0);

  // all even-weight difference masks of popcount 2k
  std::vector<std::uint32_t> zs;
  for (std::uint32_t z = 0; z < (std::uint32_t{1} << n); ++z) {
    if (std::popcount(z) == 2 * k) zs.push_back(z);
  }
  for (std::size_t i = 0; i < m.dim; ++i) {
    std::uint64_t* row = m.bits.data() + i * m.words_per_row;
    std::uint32_t x = cube.mask(i);
    for (std::uint32_t z : zs) {
      std::size_t j = cube.index(x ^ z);
      row[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
  return m;
}

std::vector<int> chi_vector(const EvenCube& cube, std::uint32_t s_mask) {
  if (s_mask >= (std::uint32_t{1} << cube.n())) throw InvalidInput("chi_vector: mask out of range");
  std::vector<int> v(cube.dim());
  for (std::size_t i = 0; i < cube.dim(); ++i) {
    v[i] = (std::popcount(cube.mask(i) & s_mask) % 2 == 0) ? 1 : -1;
  }
  return v;
}

BigInt mk_eigenvalue(int n, int k, int s) {
  if (n < 1 || k < 0 || s < 0 || s > n) throw InvalidInput("mk_eigenvalue: need 0 <= s <= n, k >= 0");
  BigInt acc = 0;
  for (int i = 0; i <= s; ++i) {
    BigInt term = binomial(s, i) * binomial(n - s, 2 * k - i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

BigInt big_m_eigenvalue(int n, int t, int s) {
  if (t < 1) throw InvalidInput("big_m_eigenvalue: t >= 1 required");
  if (s < 0 || s > n) throw InvalidInput("big_m_eigenvalue: 0 <= s <= n required");
  BigInt acc = 0;
  for (int k = t + 1; 2 * k <= n; ++k) {
    acc += binomial(k - 1, t) * mk_eigenvalue(n, k, s);
  }
  if (n >= 2 * t + 2 && sgn(acc) != sign_class(n, t, s)) {
    throw std::logic_error("big_m_eigenvalue: computed sign contradicts the classification at s=" +
                           std::to_string(s));
  }
  return acc;
}

int sign_class(int n, int t, int s) {
  if (t < 1) throw InvalidInput("sign_class: t >= 1 required");
  if (n < 2 * t + 2) throw InvalidInput("spectral method requires n >= 2t+2");
  if (s < 0 || s > n) throw InvalidInput("sign_class: 0 <= s <= n required");
  if (s == 0 || s == n) return 1;
  if (s <= t) return s % 2 == 0 ? 1 : -1;
  if (s <= n - t - 1) return (t + 1) % 2 == 0 ? 1 : -1;
  return (n - s) % 2 == 0 ? 1 : -1;
}

SpectrumReport cvetkovic_bound(int n, int t) {
  if (t < 1) throw InvalidInput("cvetkovic_bound: t >= 1 required");
  if (n < 2 * t + 2) throw InvalidInput("spectral method requires n >= 2t+2");

  SpectrumReport rep;
  rep.n = n;
  rep.t = t;
  // one eigenvector per complement pair {S, [n] \ S}; representatives s <= n/2
  for (int s = 0; 2 * s <= n; ++s) {
    SpectrumClass cls;
    cls.size = s;
    cls.eigenvalue = big_m_eigenvalue(n, t, s);
    cls.multiplicity = binomial(n, s);
    if (2 * s == n) cls.multiplicity /= 2;
    cls.sign = sgn(cls.eigenvalue);
    if (cls.sign >= 0) rep.n_ge0 += cls.multiplicity;
    if (cls.sign <= 0) rep.n_le0 += cls.multiplicity;
    rep.classes.push_back(std::move(cls));
  }
  rep.bound = rep.n_ge0 < rep.n_le0 ? rep.n_ge0 : rep.n_le0;

  BigInt closed = 0;
  for (int i = t % 2; i <= t; i += 2) closed += binomial(n, i);
  if (rep.bound != closed) {
    throw std::logic_error("cvetkovic_bound: sign count disagrees with the closed form");
  }
  return rep;
}

VerifyReport verify_spectrum(int n, int t, BigInt (*eigenvalue)(int, int, int)) {
  check_n(n, 14, "verify_spectrum");
  if (t < 1) throw InvalidInput("verify_spectrum: t >= 1 required");
  if (eigenvalue == nullptr) eigenvalue = &big_m_eigenvalue;

  EvenCube cube(n);
  std::size_t dim = cube.dim();

  // difference masks of the weighted matrix M = sum_{k>t} C(k-1,t) M_k,
  // with the weight attached per mask
  std::vector<std::pair<std::uint32_t, std::int64_t>> diffs;
  for (std::uint32_t z = 1; z < (std::uint32_t{1} << n); ++z) {
    int pc = std::popcount(z);
    if (pc % 2 == 0 && pc >= 2 * (t + 1)) {
      diffs.emplace_back(z, static_cast<std::int64_t>(binomial(pc / 2 - 1, t)));
    }
  }

  for (int s = 0; s <= n; ++s) {
    std::uint32_t s_mask = (s == 0) ? 0 : ((std::uint32_t{1} << s) - 1);  // S = {1..s}
    std::vector<int> v = chi_vector(cube, s_mask);
    BigInt lambda_big = eigenvalue(n, t, s);
    // entries of M v stay far inside int64 for n <= 14
    std::int64_t lambda = static_cast<std::int64_t>(lambda_big);
    for (std::size_t i = 0; i < dim; ++i) {
      std::int64_t acc = 0;
      std::uint32_t x = cube.mask(i);
      for (const auto& [z, w] : diffs) {
        acc += w * v[cube.index(x ^ z)];
      }
      if (acc != lambda * v[i]) {
        return {false, s,
                "M*chi mismatch at |S|=" + std::to_string(s) + ", row " + std::to_string(i) +
                    ": got " + std::to_string(acc) + ", expected " +
                    std::to_string(lambda * v[i])};
      }
    }
  }

  // orthogonality: representatives always, every character when n <= 6
  auto dot = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < dim; ++i) acc += static_cast<std::int64_t>(a[i]) * b[i];
    return acc;
  };
  std::vector<std::uint32_t> smasks;
  if (n <= 6) {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) smasks.push_back(m);
  } else {
    for (int s = 0; s <= n; ++s) smasks.push_back(s == 0 ? 0 : (std::uint32_t{1} << s) - 1);
  }
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::size_t a = 0; a < smasks.size(); ++a) {
    std::vector<int> va = chi_vector(cube, smasks[a]);
    for (std::size_t b = a; b < smasks.size(); ++b) {
      std::vector<int> vb = chi_vector(cube, smasks[b]);
      std::int64_t d = dot(va, vb);
      bool same = smasks[a] == smasks[b] || smasks[a] == (full ^ smasks[b]);
      std::int64_t expect = same ? static_cast<std::int64_t>(dim) : 0;
      if (d != expect) {
        return {false, -1,
                "orthogonality failure between masks " + std::to_string(smasks[a]) + " and " +
                    std::to_string(smasks[b])};
      }
    }
  }
  return {};
}

BoundCertificate spectral_bound_for_D(int n, const DistanceSpec& dspec) {
  BoundCertificate cert;
  cert.name = "spectral";
  cert.provenance = "Cvetkovic eigenvalue-sign bound on the even half-cube";

  bool all_even = dspec.all_even();
  cert.preconditions.push_back({"all distances even", all_even});
  if (!all_even) {
    cert.valid = false;
    cert.value = BigInt(1) << n;  // trivial fallback, flagged invalid
    cert.details["note"] = "odd distance present";
    cert.preconditions.push_back({"n >= max(D) + 2", false});
    return cert;
  }
  int t = dspec.max() / 2;
  bool big_enough = n >= 2 * t + 2;
  cert.preconditions.push_back({"n >= max(D) + 2", big_enough});
  if (!big_enough) {
    cert.valid = false;
    cert.value = BigInt(1) << (n - 1);  // the n <= 2t+1 regime value
    cert.details["note"] = "below the spectral regime; even-distance parity value reported";
    return cert;
  }
  SpectrumReport rep = cvetkovic_bound(n, t);
  cert.valid = true;
  cert.value = rep.bound;
  cert.details["t"] = std::to_string(t);
  return cert;
}

}  // namespace kleitman::spectral
