#pragma once

#include <cstdint>
#include <vector>

namespace acf {

/// z = unit * canonical.
template <typename T>
struct Associate {
  T unit;
  T canonical;

  friend bool operator==(const Associate&, const Associate&) = default;
};

template <typename T>
struct PrimePower {
  T prime;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// unit * prod(prime^exponent). Primes are canonical, pairwise
/// non-associate, and listed in the ring's canonical order.
template <typename T>
struct PrimeFactorization {
  T unit;
  std::vector<PrimePower<T>> factors;

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

/// Largest size (|n| in Z, norm in Z[i]) accepted by trial-division
/// factorization.
struct FactorBound {
  std::int64_t max_size = 1'000'000'000'000;
};

}  // namespace acf
