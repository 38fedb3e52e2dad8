#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing
// here calls the factorizer.

#include <cstdint>
#include <random>

#include "acfactor/gaussian.hpp"
#include "acfactor/integer.hpp"

namespace acf::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'ac'f00dULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Integer random_nonzero_integer(std::int64_t bound) {
  std::int64_t v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return v;
}

inline Gaussian random_gaussian(std::int64_t bound) {
  return {uniform(-bound, bound), uniform(-bound, bound)};
}

inline Gaussian random_nonzero_gaussian(std::int64_t bound) {
  Gaussian z;
  while (z == Gaussian::zero()) z = random_gaussian(bound);
  return z;
}

/// Plain-integer gcd by repeated subtraction-free remainder, on raw int64.
inline std::int64_t raw_gcd(std::int64_t x, std::int64_t y) {
  x = x < 0 ? -x : x;
  y = y < 0 ? -y : y;
  while (y != 0) {
    std::int64_t r = x % y;
    x = y;
    y = r;
  }
  return x;
}

/// y | x in Z[i], decided from the componentwise formula x * conj(y) / N(y).
inline bool gaussian_divides(const Gaussian& y, const Gaussian& x) {
  const std::int64_t n = y.re.value() * y.re.value() + y.im.value() * y.im.value();
  if (n == 0) return x == Gaussian::zero();
  const std::int64_t re = x.re.value() * y.re.value() + x.im.value() * y.im.value();
  const std::int64_t im = x.im.value() * y.re.value() - x.re.value() * y.im.value();
  return re % n == 0 && im % n == 0;
}

/// Trial-division primality on raw int64, kept apart from acf::is_prime.
inline bool raw_is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace acf::testing
