#pragma once

#include <string>

#include "acfactor/factorizer.hpp"

namespace acf {

enum class OutputFormat { Text, Worked, Structured };

/// A coefficient as it appears in front of x, parenthesized when it has
/// both a real and an imaginary part.
template <FactorRing T>
std::string format_coefficient(const T& c);

/// coefficient * x^power, e.g. "6x^2", "-9x", "-24", "(1+2i)x".
template <FactorRing T>
std::string format_monomial(const Monomial<T>& m);

/// "4x^2+8x+3"; zero terms are dropped. Parses back to the same trinomial.
template <FactorRing T>
std::string format_trinomial(const Trinomial<T>& t);

/// "2x+1", without surrounding parentheses.
template <FactorRing T>
std::string format_binomial(const LinearBinomial<T>& f);

/// The worked solution: content, factor-pair search log, middle-term
/// rewrite, and the labeled 2x2 grouping array.
template <FactorRing T>
std::string render_trace(const StepTrace<T>& trace);

template <FactorRing T>
std::string render_result(const Factorization<T>& f, OutputFormat format);

}  // namespace acf
