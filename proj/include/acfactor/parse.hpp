#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "acfactor/gaussian.hpp"
#include "acfactor/integer.hpp"
#include "acfactor/quadratic.hpp"

namespace acf {

/// Auto reads the integers unless an 'i' literal appears.
enum class RingChoice { Auto, Integer, Gaussian };

enum class RingKind { Integer, Gaussian };

struct ParsedInput {
  RingKind ring;
  std::variant<Trinomial<Integer>, Trinomial<Gaussian>> trinomial;
  std::string source_text;
};

/// Grammar (whitespace ignored everywhere):
///
///   polynomial := sign? term (('+' | '-') term)*
///   term       := coeff? ('*'? 'x' ('^' digit+)?)?      (not empty)
///   coeff      := integer | integer? 'i' | '(' gauss ')'
///   gauss      := sign? part (('+' | '-') part)*
///   part       := integer | integer? 'i'
///
/// Exponents must be 0, 1 or 2; repeated powers are summed; the x^2
/// coefficient must end up nonzero. Throws SyntaxError, DegreeError or
/// RingMismatch.
ParsedInput parse_polynomial(std::string_view text, RingChoice ring = RingChoice::Auto);

}  // namespace acf
