#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "acfactor/quadratic.hpp"

namespace acf {

enum class Verdict { Factored, Irreducible, NotApplicable };

template <FactorRing T>
struct ContentStep {
  T content;
  Trinomial<T> primitive;
};

template <FactorRing T>
struct ProductStep {
  T a;
  T c;
  T product;
  T target_sum;
};

template <FactorRing T>
struct CandidateStep {
  T b1;
  T b2;
  bool accepted = false;
};

/// a x^2 + b1 x + b2 x + c.
template <FactorRing T>
struct RewriteStep {
  T a;
  T b1;
  T b2;
  T c;
};

/// The 2x2 grouping array
///
///              | columns[0] | columns[1]
///   -----------+------------+-----------
///   rows[0]    |   a x^2    |   b1 x
///   rows[1]    |   b2 x     |   c
///
/// columns[0] is found as the gcd of the first column; the other three
/// labels follow by exact division, in the order rows[0], columns[1],
/// rows[1]. Every cell equals its row label times its column label.
template <FactorRing T>
struct GroupArray {
  std::array<std::array<Monomial<T>, 2>, 2> cells;
  std::array<Monomial<T>, 2> rows;
  std::array<Monomial<T>, 2> columns;

  bool consistent() const {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (rows[i] * columns[j] != cells[i][j]) return false;
      }
    }
    return true;
  }
};

template <FactorRing T>
struct ResultStep {
  Verdict verdict;
  T unit;
  T content;
  std::optional<std::pair<LinearBinomial<T>, LinearBinomial<T>>> factors;
};

template <FactorRing T>
using Step = std::variant<ContentStep<T>, ProductStep<T>, CandidateStep<T>, RewriteStep<T>,
                          GroupArray<T>, ResultStep<T>>;

template <FactorRing T>
struct StepTrace {
  std::vector<Step<T>> steps;

  template <typename S>
  void add(S step) {
    steps.emplace_back(std::move(step));
  }

  template <typename S>
  std::vector<S> all() const {
    std::vector<S> out;
    for (const auto& s : steps) {
      if (const auto* p = std::get_if<S>(&s)) out.push_back(*p);
    }
    return out;
  }
};

}  // namespace acf
