#pragma once

// Factoring a x^2 + b x + c by splitting the middle term: find b1, b2 with
// b1 b2 = ac and b1 + b2 = b, rewrite as a x^2 + b1 x + b2 x + c, and
// recover (A x + B)(C x + D) by grouping.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "acfactor/quadratic.hpp"
#include "acfactor/trace.hpp"

namespace acf {

/// Result of factor_quadratic. When Factored,
/// expand(unit, content, factors->first, factors->second) == input.
template <FactorRing T>
struct Factorization {
  Factorization(Trinomial<T> input_, Verdict verdict_)
      : input(std::move(input_)), verdict(verdict_) {}

  Trinomial<T> input;
  Verdict verdict;
  T unit = T::one();
  T content = T::one();
  std::optional<std::pair<LinearBinomial<T>, LinearBinomial<T>>> factors;
  /// Irreducible only: the primitive part the verdict refers to.
  std::optional<Trinomial<T>> primitive;
  std::string reason;
  StepTrace<T> trace;
};

/// Puts a found split in presentation order. When ac is canonical (positive
/// in Z) the smaller part comes first; otherwise the larger one does.
template <FactorRing T>
SplitPair<T> orient_split(const T& product, SplitPair<T> s) {
  const bool ascending = is_canonical(product);
  const Integer n1 = euclidean_size(s.b1);
  const Integer n2 = euclidean_size(s.b2);
  if ((ascending && n2 < n1) || (!ascending && n1 < n2)) std::swap(s.b1, s.b2);
  return s;
}

/// Exhaustive search over b1 = v * d for every canonical divisor d of ac (in
/// increasing size) and every unit v (in T::units() order). The first hit is
/// returned, oriented by orient_split. Every tested candidate is appended to
/// `trace` when one is given.
template <FactorRing T>
std::optional<SplitPair<T>> find_split(const Trinomial<T>& t, const FactorBound& bound = {},
                                       StepTrace<T>* trace = nullptr) {
  if (t.c == T::zero()) throw InputError("split search needs a nonzero constant term");
  if (!is_primitive(t)) throw InputError("split search needs a primitive trinomial");
  const T product = t.a * t.c;
  for (const T& d : divisors(factor_into_primes(product, bound))) {
    for (const T& v : T::units()) {
      const T b1 = v * d;
      const T b2 = exact_div(product, b1);
      const bool hit = b1 + b2 == t.b;
      if (trace != nullptr) trace->add(CandidateStep<T>{b1, b2, hit});
      if (hit) return orient_split(product, SplitPair<T>{b1, b2});
    }
  }
  return std::nullopt;
}

template <FactorRing T>
void check_split(const Trinomial<T>& t, const SplitPair<T>& s) {
  if (s.b1 * s.b2 != t.a * t.c || s.b1 + s.b2 != t.b) {
    throw InputError("(" + to_string(s.b1) + ", " + to_string(s.b2) +
                     ") is not a split of the middle coefficient");
  }
}

/// Factoring by grouping: A = gcd(a, b1), C = a/A, D = b1/A, B = c/D.
/// Returns (A x + B, C x + D).
template <FactorRing T>
std::pair<LinearBinomial<T>, LinearBinomial<T>> group_factor(const Trinomial<T>& t,
                                                              const SplitPair<T>& s) {
  check_split(t, s);
  const T A = gcd(t.a, s.b1);
  const T C = exact_div(t.a, A);
  const T D = exact_div(s.b1, A);
  const T B = exact_div(t.c, D);
  LinearBinomial<T> first(A, B);
  LinearBinomial<T> second(C, D);
  if (expand(T::one(), T::one(), first, second) != t) {
    throw InternalError("grouping produced factors that do not expand to the input");
  }
  return {first, second};
}

/// The grouping array for a primitive trinomial and a valid split, labeled
/// starting from the gcd of the first column.
template <FactorRing T>
GroupArray<T> build_group_array(const Trinomial<T>& t, const SplitPair<T>& s) {
  check_split(t, s);
  const T col0 = gcd(t.a, s.b2);
  const T row0 = exact_div(t.a, col0);
  const T col1 = exact_div(s.b1, row0);
  const T row1 = exact_div(s.b2, col0);
  GroupArray<T> g{
      {{{{Monomial<T>{t.a, 2}, Monomial<T>{s.b1, 1}}},
        {{Monomial<T>{s.b2, 1}, Monomial<T>{t.c, 0}}}}},
      {{Monomial<T>{row0, 1}, Monomial<T>{row1, 0}}},
      {{Monomial<T>{col0, 1}, Monomial<T>{col1, 0}}},
  };
  if (!g.consistent()) throw InternalError("grouping array labels do not match its cells");
  return g;
}

/// The whole pipeline: content, split search, grouping, normalization, and
/// a final check by expansion. Trinomials with c = 0 are reported as
/// NotApplicable; a primitive part with no split is Irreducible.
template <FactorRing T>
Factorization<T> factor_quadratic(const Trinomial<T>& t, const FactorBound& bound = {}) {
  Factorization<T> out(t, Verdict::NotApplicable);
  if (t.c == T::zero()) {
    out.reason = "c=0, factor x directly";
    out.trace.add(ResultStep<T>{out.verdict, out.unit, out.content, std::nullopt});
    return out;
  }

  auto [g, p] = content_extract(t);
  out.content = g;
  out.trace.add(ContentStep<T>{g, p});
  out.trace.add(ProductStep<T>{p.a, p.c, p.a * p.c, p.b});

  const auto split = find_split(p, bound, &out.trace);
  if (!split) {
    out.verdict = Verdict::Irreducible;
    out.primitive = p;
    out.trace.add(ResultStep<T>{out.verdict, out.unit, out.content, std::nullopt});
    return out;
  }

  out.trace.add(RewriteStep<T>{p.a, split->b1, split->b2, p.c});
  out.trace.add(build_group_array(p, *split));

  auto [f1, f2] = group_factor(p, *split);
  auto [u1, c1] = canonical_binomial(f1);
  auto [u2, c2] = canonical_binomial(f2);
  if (binomial_less(c2, c1)) std::swap(c1, c2);
  out.verdict = Verdict::Factored;
  out.unit = u1 * u2;
  out.factors.emplace(c1, c2);
  if (expand(out.unit, out.content, c1, c2) != t) {
    throw InternalError("normalized factorization does not expand to the input");
  }
  out.trace.add(ResultStep<T>{out.verdict, out.unit, out.content, out.factors});
  return out;
}

}  // namespace acf
