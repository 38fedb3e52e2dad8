#pragma once

#include <span>
#include <string>
#include <string_view>

#include "acfactor/integer.hpp"
#include "acfactor/ring.hpp"

namespace acf {

/// re + im*i with exact, overflow-checked integer parts.
struct Gaussian {
  static constexpr std::string_view ring_name = "gaussian";

  Integer re;
  Integer im;

  constexpr Gaussian() = default;
  constexpr Gaussian(Integer real, Integer imag = 0) : re(real), im(imag) {}  // NOLINT
  constexpr Gaussian(std::int64_t real) : re(real), im(0) {}  // NOLINT

  static constexpr Gaussian zero() { return {0, 0}; }
  static constexpr Gaussian one() { return {1, 0}; }
  static constexpr Gaussian i() { return {0, 1}; }
  /// {1, i, -1, -i}, in that order.
  static std::span<const Gaussian> units();

  friend constexpr Gaussian operator+(const Gaussian& x, const Gaussian& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend constexpr Gaussian operator-(const Gaussian& x, const Gaussian& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend constexpr Gaussian operator*(const Gaussian& x, const Gaussian& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  constexpr Gaussian operator-() const { return {-re, -im}; }

  friend constexpr bool operator==(const Gaussian&, const Gaussian&) = default;
};

constexpr Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }

/// re^2 + im^2.
constexpr Integer norm(const Gaussian& z) { return z.re * z.re + z.im * z.im; }

struct GaussianDivMod {
  Gaussian quotient;
  Gaussian remainder;
};

/// x = q*y + r with norm(r) < norm(y). Each coordinate of the exact
/// quotient is rounded to the nearest integer, ties toward zero.
GaussianDivMod euclidean_divmod(const Gaussian& x, const Gaussian& y);

enum class SplittingKind { Ramified, Split, Inert };

/// How a rational prime p factors in Z[i]. For Split, `prime` and
/// `conjugate` are the two canonical non-associate primes above p, `prime`
/// being the one with the smaller real part. Otherwise `conjugate` equals
/// `prime`.
struct PrimeSplitting {
  SplittingKind kind;
  Gaussian prime;
  Gaussian conjugate;
};

PrimeSplitting split_rational_prime(Integer p);

/// x with x^2 = -1 (mod p), for a prime p = 1 (mod 4).
Integer sqrt_minus_one_mod(Integer p);

Associate<Gaussian> canonical_associate(const Gaussian& z);
Gaussian gcd(const Gaussian& x, const Gaussian& y);
Gaussian exact_div(const Gaussian& x, const Gaussian& y);

/// Factors norm(z) in Z, then divides out the Gaussian primes above each
/// rational prime. The bound applies to norm(z).
PrimeFactorization<Gaussian> factor_into_primes(const Gaussian& z,
                                                const FactorBound& bound = {});

inline Integer euclidean_size(const Gaussian& z) { return norm(z); }

/// Norm, then real part, then imaginary part.
bool canonical_less(const Gaussian& x, const Gaussian& y);

/// "a+bi", "a-bi", "bi", "a", with unit coefficients of i shown as "i"/"-i".
std::string to_string(const Gaussian& z);

}  // namespace acf
