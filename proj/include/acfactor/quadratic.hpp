#pragma once

#include <tuple>
#include <utility>

#include "acfactor/errors.hpp"
#include "acfactor/ring.hpp"

namespace acf {

/// a x^2 + b x + c with a != 0.
template <FactorRing T>
struct Trinomial {
  T a;
  T b;
  T c;

  Trinomial(T a_, T b_, T c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a == T::zero()) throw DegreeError("leading coefficient is zero");
  }

  friend bool operator==(const Trinomial&, const Trinomial&) = default;
};

/// leading x + constant with leading != 0.
template <FactorRing T>
struct LinearBinomial {
  T leading;
  T constant;

  LinearBinomial(T leading_, T constant_)
      : leading(std::move(leading_)), constant(std::move(constant_)) {
    if (leading == T::zero()) throw DegreeError("binomial leading coefficient is zero");
  }

  friend bool operator==(const LinearBinomial&, const LinearBinomial&) = default;
};

/// b1 * b2 = a * c and b1 + b2 = b.
template <FactorRing T>
struct SplitPair {
  T b1;
  T b2;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

/// coefficient * x^power, used for the grouping array cells and labels.
template <FactorRing T>
struct Monomial {
  T coefficient;
  int power = 0;

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    return {x.coefficient * y.coefficient, x.power + y.power};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// unit * content * (A x + B)(C x + D), multiplied out (FOIL).
template <FactorRing T>
Trinomial<T> expand(const T& unit, const T& content, const LinearBinomial<T>& f1,
                    const LinearBinomial<T>& f2) {
  const T scale = unit * content;
  return Trinomial<T>(scale * (f1.leading * f2.leading),
                      scale * (f1.constant * f2.leading + f1.leading * f2.constant),
                      scale * (f1.constant * f2.constant));
}

template <FactorRing T>
Trinomial<T> scale(const T& k, const Trinomial<T>& t) {
  return Trinomial<T>(k * t.a, k * t.b, k * t.c);
}

template <FactorRing T>
struct ContentSplit {
  T content;
  Trinomial<T> primitive;
};

/// Pulls out the canonical gcd of the three coefficients.
template <FactorRing T>
ContentSplit<T> content_extract(const Trinomial<T>& t) {
  const T g = gcd(gcd(t.a, t.b), t.c);
  return {g, Trinomial<T>(exact_div(t.a, g), exact_div(t.b, g), exact_div(t.c, g))};
}

template <FactorRing T>
bool is_primitive(const Trinomial<T>& t) {
  return is_unit(gcd(gcd(t.a, t.b), t.c));
}

/// Rescales a binomial by a unit so its leading coefficient is canonical.
/// Returns that unit u, with u * canonical == f.
template <FactorRing T>
std::pair<T, LinearBinomial<T>> canonical_binomial(const LinearBinomial<T>& f) {
  auto [u, lead] = canonical_associate(f.leading);
  return {u, LinearBinomial<T>(lead, exact_div(f.constant, u))};
}

/// Output order for factors: leading coefficient, then constant, both under
/// canonical_less.
template <FactorRing T>
bool binomial_less(const LinearBinomial<T>& x, const LinearBinomial<T>& y) {
  if (x.leading != y.leading) return canonical_less(x.leading, y.leading);
  return canonical_less(x.constant, y.constant);
}

}  // namespace acf
