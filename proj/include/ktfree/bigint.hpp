#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigInt ipow(BigInt base, std::uint64_t e) {
  BigInt r = 1;
  while (e != 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

/// Coefficients e_0, ..., e_m of prod (1 + x_i x).
inline std::vector<BigInt> elementary_symmetric(std::span<const std::int64_t> xs) {
  std::vector<BigInt> e(xs.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * xs[i];
  return e;
}

/// Converts an exact rational that must be integral; anything else is a transcription bug.
inline BigInt require_integral(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw std::logic_error(std::string(what) + ": non-integral value " + q.str());
  return boost::multiprecision::numerator(q);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace ktfree
