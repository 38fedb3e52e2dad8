#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "acfactor/errors.hpp"
#include "acfactor/ring_types.hpp"

namespace acf {

/// Exact 64-bit signed integer. Every operation is overflow-checked and
/// throws InputTooLarge instead of wrapping.
class Integer {
 public:
  static constexpr std::string_view ring_name = "int";

  constexpr Integer() = default;
  constexpr Integer(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return value_; }

  static constexpr Integer zero() { return Integer(0); }
  static constexpr Integer one() { return Integer(1); }
  static std::span<const Integer> units();

  friend constexpr Integer operator+(Integer x, Integer y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x.value_, y.value_, &r)) overflow();
    return Integer(r);
  }
  friend constexpr Integer operator-(Integer x, Integer y) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(x.value_, y.value_, &r)) overflow();
    return Integer(r);
  }
  friend constexpr Integer operator*(Integer x, Integer y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x.value_, y.value_, &r)) overflow();
    return Integer(r);
  }
  constexpr Integer operator-() const { return Integer(0) - *this; }

  Integer& operator+=(Integer y) { return *this = *this + y; }
  Integer& operator-=(Integer y) { return *this = *this - y; }
  Integer& operator*=(Integer y) { return *this = *this * y; }

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr auto operator<=>(Integer, Integer) = default;

 private:
  [[noreturn]] static void overflow() { throw InputTooLarge("integer overflow"); }

  std::int64_t value_ = 0;
};

constexpr Integer abs(Integer n) { return n < 0 ? -n : n; }

/// Truncating quotient and remainder; divisor must be nonzero.
struct IntegerDivMod {
  Integer quotient;
  Integer remainder;
};
IntegerDivMod truncated_divmod(Integer x, Integer y);

Associate<Integer> canonical_associate(Integer n);
Integer gcd(Integer x, Integer y);
Integer exact_div(Integer x, Integer y);
PrimeFactorization<Integer> factor_into_primes(Integer n, const FactorBound& bound = {});

/// |n|; the Euclidean size.
inline Integer euclidean_size(Integer n) { return abs(n); }

/// Total order used for sorting output: plain numeric order.
inline bool canonical_less(Integer x, Integer y) { return x < y; }

std::optional<Integer> is_perfect_square(Integer n);
bool is_prime(Integer n);

std::string to_string(Integer n);

}  // namespace acf
