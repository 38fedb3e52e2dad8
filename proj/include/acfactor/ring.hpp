#pragma once

// The coefficient-ring contract. A backend is a value type T plus free
// functions found by argument-dependent lookup; nothing here is virtual.

#include <algorithm>
#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acfactor/integer.hpp"
#include "acfactor/ring_types.hpp"

namespace acf {

/// Exact commutative ring with a finite, enumerable unit group, canonical
/// associates, GCD, and prime factorization (a UFD with a computable
/// factorization).
template <typename T>
concept FactorRing =
    std::regular<T> &&
    requires(const T& x, const T& y, const FactorBound& bound) {
      { T::ring_name } -> std::convertible_to<std::string_view>;
      { T::zero() } -> std::same_as<T>;
      { T::one() } -> std::same_as<T>;
      { T::units() } -> std::convertible_to<std::span<const T>>;
      { x + y } -> std::same_as<T>;
      { x - y } -> std::same_as<T>;
      { x * y } -> std::same_as<T>;
      { -x } -> std::same_as<T>;
      { canonical_associate(x) } -> std::same_as<Associate<T>>;
      { gcd(x, y) } -> std::same_as<T>;
      { exact_div(x, y) } -> std::same_as<T>;
      { factor_into_primes(x, bound) } -> std::same_as<PrimeFactorization<T>>;
      { euclidean_size(x) } -> std::same_as<Integer>;
      { canonical_less(x, y) } -> std::convertible_to<bool>;
      { to_string(x) } -> std::same_as<std::string>;
    };

template <FactorRing T>
bool is_unit(const T& x) {
  auto us = T::units();
  return std::find(us.begin(), us.end(), x) != us.end();
}

template <FactorRing T>
bool is_canonical(const T& x) {
  return canonical_associate(x).unit == T::one();
}

template <FactorRing T>
bool are_associates(const T& x, const T& y) {
  return canonical_associate(x).canonical == canonical_associate(y).canonical;
}

/// Exact divisibility test: y | x.
template <FactorRing T>
bool divides(const T& y, const T& x) {
  if (y == T::zero()) return x == T::zero();
  try {
    (void)exact_div(x, y);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

template <FactorRing T>
T power(T base, int exponent) {
  T out = T::one();
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

/// Multiplies a factorization back out.
template <FactorRing T>
T recombine(const PrimeFactorization<T>& f) {
  T out = f.unit;
  for (const auto& [p, e] : f.factors) out = out * power(p, e);
  return out;
}

/// Orders by Euclidean size first, then by canonical_less.
template <FactorRing T>
bool size_then_canonical_less(const T& x, const T& y) {
  Integer sx = euclidean_size(x);
  Integer sy = euclidean_size(y);
  if (sx != sy) return sx < sy;
  return canonical_less(x, y);
}

/// Every canonical divisor of the factored element, each exactly once, in
/// increasing size. The count is prod(exponent + 1).
template <FactorRing T>
std::vector<T> divisors(const PrimeFactorization<T>& f) {
  std::vector<T> out{T::one()};
  for (const auto& [p, e] : f.factors) {
    const std::size_t n = out.size();
    T pk = T::one();
    for (int k = 1; k <= e; ++k) {
      pk = pk * p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  for (auto& d : out) d = canonical_associate(d).canonical;
  std::sort(out.begin(), out.end(), size_then_canonical_less<T>);
  return out;
}

}  // namespace acf
