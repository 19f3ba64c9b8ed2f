#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kleitman {

// Bound values and eigenvalues overflow 64 bits well inside the supported
// parameter ranges (C(1000,20) and friends), so everything certificate-facing
// is exact multiprecision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// floor(r) for any sign of r.
BigInt floor_rat(const BigRat& r);

// Decimal rendering; rationals as "p/q", integers without the "/q".
std::string to_decimal(const BigInt& v);
std::string to_decimal(const BigRat& v);

// Fits-in-int64 check used when emitting JSON numbers.
bool fits_int64(const BigInt& v);

}  // namespace kleitman
