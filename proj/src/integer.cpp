#include "acfactor/integer.hpp"

#include <array>
#include <cmath>

namespace acf {

std::span<const Integer> Integer::units() {
  static constexpr std::array<Integer, 2> kUnits{Integer(1), Integer(-1)};
  return kUnits;
}

IntegerDivMod truncated_divmod(Integer x, Integer y) {
  if (y == 0) throw DivisionByZero();
  // INT64_MIN / -1 is the only overflowing case.
  if (y == -1) return {-x, 0};
  return {x.value() / y.value(), x.value() % y.value()};
}

Associate<Integer> canonical_associate(Integer n) {
  if (n < 0) return {Integer(-1), -n};
  return {Integer(1), n};
}

Integer gcd(Integer x, Integer y) {
  x = abs(x);
  y = abs(y);
  while (y != 0) {
    Integer r = truncated_divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x;
}

Integer exact_div(Integer x, Integer y) {
  auto [q, r] = truncated_divmod(x, y);
  if (r != 0) {
    throw NotDivisible(to_string(x) + " is not divisible by " + to_string(y));
  }
  return q;
}

PrimeFactorization<Integer> factor_into_primes(Integer n, const FactorBound& bound) {
  if (n == 0) throw ZeroInput();
  auto [unit, m] = canonical_associate(n);
  if (m > bound.max_size) {
    throw InputTooLarge(to_string(n) + " exceeds the factorization bound " +
                        std::to_string(bound.max_size));
  }
  PrimeFactorization<Integer> out{unit, {}};
  std::int64_t rest = m.value();
  auto take = [&](std::int64_t p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({Integer(p), e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel.
  for (std::int64_t p = 5; p <= rest / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) out.factors.push_back({Integer(rest), 1});
  return out;
}

std::optional<Integer> is_perfect_square(Integer n) {
  if (n < 0) return std::nullopt;
  auto v = static_cast<std::uint64_t>(n.value());
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) return std::nullopt;
  return Integer(static_cast<std::int64_t>(s));
}

bool is_prime(Integer n) {
  std::int64_t v = n.value();
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  for (std::int64_t p = 5; p <= v / p; p += 6) {
    if (v % p == 0 || v % (p + 2) == 0) return false;
  }
  return true;
}

std::string to_string(Integer n) { return std::to_string(n.value()); }

}  // namespace acf
