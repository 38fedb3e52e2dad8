#include "acfactor/gaussian.hpp"

#include <array>
#include <tuple>

namespace acf {

namespace {

// Nearest integer to n/d (d > 0), ties toward zero.
Integer round_div(Integer n, Integer d) {
  auto [q, r] = truncated_divmod(n, d);
  if (abs(r) * 2 > d) q = n < 0 ? q - 1 : q + 1;
  return q;
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(x) * y % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t out = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) out = mul_mod(out, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return out;
}

}  // namespace

std::span<const Gaussian> Gaussian::units() {
  static constexpr std::array<Gaussian, 4> kUnits{Gaussian(1, 0), Gaussian(0, 1),
                                                  Gaussian(-1, 0), Gaussian(0, -1)};
  return kUnits;
}

GaussianDivMod euclidean_divmod(const Gaussian& x, const Gaussian& y) {
  if (y == Gaussian::zero()) throw DivisionByZero();
  const Integer n = norm(y);
  const Gaussian num = x * conj(y);
  const Gaussian q{round_div(num.re, n), round_div(num.im, n)};
  return {q, x - q * y};
}

Associate<Gaussian> canonical_associate(const Gaussian& z) {
  if (z == Gaussian::zero()) return {Gaussian::one(), z};
  for (const Gaussian& u : Gaussian::units()) {
    // u^-1 = conj(u) for units.
    Gaussian w = z * conj(u);
    if (w.re > 0 && w.im >= 0) return {u, w};
  }
  throw InternalError("no canonical associate for " + to_string(z));
}

Gaussian gcd(const Gaussian& x, const Gaussian& y) {
  Gaussian a = x;
  Gaussian b = y;
  while (b != Gaussian::zero()) {
    Gaussian r = euclidean_divmod(a, b).remainder;
    a = b;
    b = r;
  }
  return canonical_associate(a).canonical;
}

Gaussian exact_div(const Gaussian& x, const Gaussian& y) {
  auto [q, r] = euclidean_divmod(x, y);
  if (r != Gaussian::zero()) {
    throw NotDivisible(to_string(x) + " is not divisible by " + to_string(y));
  }
  return q;
}

Integer sqrt_minus_one_mod(Integer p) {
  const std::int64_t m = p.value();
  if (m % 4 != 1 || !is_prime(p)) {
    throw NotPrime(to_string(p) + " is not a prime congruent to 1 mod 4");
  }
  for (std::int64_t n = 2; n < m; ++n) {
    std::int64_t x = pow_mod(n, (m - 1) / 4, m);
    if (mul_mod(x, x, m) == m - 1) return x;
  }
  throw InternalError("no square root of -1 modulo " + to_string(p));
}

PrimeSplitting split_rational_prime(Integer p) {
  if (!is_prime(p)) throw NotPrime(to_string(p) + " is not prime");
  if (p == 2) return {SplittingKind::Ramified, {1, 1}, {1, 1}};
  if (p.value() % 4 == 3) return {SplittingKind::Inert, {p, 0}, {p, 0}};
  Gaussian pi = gcd(Gaussian(p), Gaussian(sqrt_minus_one_mod(p), 1));
  Gaussian other = canonical_associate(conj(pi)).canonical;
  if (other.re < pi.re) std::swap(pi, other);
  return {SplittingKind::Split, pi, other};
}

PrimeFactorization<Gaussian> factor_into_primes(const Gaussian& z, const FactorBound& bound) {
  if (z == Gaussian::zero()) throw ZeroInput();
  const Integer n = norm(z);
  if (n > bound.max_size) {
    throw InputTooLarge("norm of " + to_string(z) + " exceeds the factorization bound " +
                        std::to_string(bound.max_size));
  }
  PrimeFactorization<Gaussian> out{Gaussian::one(), {}};
  Gaussian rest = z;
  // Divides `prime` out of `rest` as often as it goes, at most `limit` times.
  auto strip = [&](const Gaussian& prime, int limit) {
    int e = 0;
    while (e < limit) {
      auto [q, r] = euclidean_divmod(rest, prime);
      if (r != Gaussian::zero()) break;
      rest = q;
      ++e;
    }
    if (e > 0) out.factors.push_back({prime, e});
    return e;
  };
  for (const auto& [p, e] : factor_into_primes(n, FactorBound{n.value()}).factors) {
    PrimeSplitting s = split_rational_prime(p);
    int taken = 0;
    switch (s.kind) {
      case SplittingKind::Ramified:
        taken = strip(s.prime, e);
        break;
      case SplittingKind::Inert:
        // norm(p) = p^2
        taken = 2 * strip(s.prime, e / 2);
        break;
      case SplittingKind::Split:
        taken = strip(s.prime, e);
        taken += strip(s.conjugate, e - taken);
        break;
    }
    if (taken != e) {
      throw InternalError("factorization of " + to_string(z) + " lost a factor above " +
                          to_string(p));
    }
  }
  if (!is_unit(rest)) throw InternalError("non-unit cofactor " + to_string(rest));
  out.unit = rest;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.prime, y.prime); });
  return out;
}

bool canonical_less(const Gaussian& x, const Gaussian& y) {
  return std::tuple(norm(x), x.re, x.im) < std::tuple(norm(y), y.re, y.im);
}

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + imag;
}

}  // namespace acf
