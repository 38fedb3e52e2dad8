#include <variant>

#include "acfactor/parse.hpp"
#include "acfactor/render.hpp"
#include "doctest.h"
#include "support.hpp"

using acf::Gaussian;
using acf::Integer;
using acf::RingChoice;
using acf::RingKind;
using acf::Trinomial;
namespace t = acf::testing;

namespace {

Trinomial<Integer> int_poly(std::string_view s, RingChoice r = RingChoice::Auto) {
  const auto p = acf::parse_polynomial(s, r);
  REQUIRE(p.ring == RingKind::Integer);
  return std::get<Trinomial<Integer>>(p.trinomial);
}

Trinomial<Gaussian> gauss_poly(std::string_view s, RingChoice r = RingChoice::Auto) {
  const auto p = acf::parse_polynomial(s, r);
  REQUIRE(p.ring == RingKind::Gaussian);
  return std::get<Trinomial<Gaussian>>(p.trinomial);
}

template <typename E>
std::size_t error_position(std::string_view s, RingChoice r = RingChoice::Auto) {
  try {
    (void)acf::parse_polynomial(s, r);
  } catch (const E& e) {
    return e.position();
  }
  FAIL("no error for ", s);
  return 0;
}

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(int_poly("4x^2+8x+3") == Trinomial<Integer>(4, 8, 3));
  CHECK(gauss_poly("(2+4i)x^2+(7+5i)x+10") ==
        Trinomial<Gaussian>(Gaussian(2, 4), Gaussian(7, 5), 10));
  CHECK(int_poly("3+x^2") == Trinomial<Integer>(1, 0, 3));
  CHECK(acf::parse_polynomial("3+x^2").source_text == "3+x^2");
}

TEST_CASE("terms, signs, whitespace, and repeated powers") {
  CHECK(int_poly(" 6 x ^ 2 + 7x - 24 ") == Trinomial<Integer>(6, 7, -24));
  CHECK(int_poly("-x^2-x-1") == Trinomial<Integer>(-1, -1, -1));
  CHECK(int_poly("2*x^2+3*x") == Trinomial<Integer>(2, 3, 0));
  CHECK(int_poly("x^2+x+x+1") == Trinomial<Integer>(1, 2, 1));
  CHECK(int_poly("x^2+5x^0+2x^1") == Trinomial<Integer>(1, 2, 5));
  CHECK(int_poly("3x^2-x^2") == Trinomial<Integer>(2, 0, 0));
  CHECK(gauss_poly("ix^2+2ix-i") == Trinomial<Gaussian>(Gaussian(0, 1), Gaussian(0, 2),
                                                        Gaussian(0, -1)));
  CHECK(gauss_poly("x^2+(-1-2i)x+(3-i)") ==
        Trinomial<Gaussian>(1, Gaussian(-1, -2), Gaussian(3, -1)));
  CHECK(gauss_poly("x^2+2+3i") == Trinomial<Gaussian>(1, 0, Gaussian(2, 3)));
  CHECK(gauss_poly("(i)x^2+(-i)") == Trinomial<Gaussian>(Gaussian(0, 1), 0, Gaussian(0, -1)));
}

TEST_CASE("ring selection") {
  CHECK(gauss_poly("x^2+1", RingChoice::Gaussian) == Trinomial<Gaussian>(1, 0, 1));
  CHECK(int_poly("x^2+1", RingChoice::Integer) == Trinomial<Integer>(1, 0, 1));
  CHECK(error_position<acf::RingMismatch>("x^2+2i", RingChoice::Integer) == 5);
  CHECK(error_position<acf::RingMismatch>("(1+i)x^2", RingChoice::Integer) == 3);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position<acf::SyntaxError>("4x^2++3") == 5);
  CHECK(error_position<acf::SyntaxError>("") == 0);
  CHECK(error_position<acf::SyntaxError>("x^") == 2);
  CHECK(error_position<acf::SyntaxError>("x^2+(1+2i") == 9);
  CHECK(error_position<acf::SyntaxError>("x^2+y") == 4);
  CHECK(error_position<acf::SyntaxError>("x^2+3)") == 5);
  CHECK(error_position<acf::SyntaxError>("x^2+*x") == 4);
  CHECK(error_position<acf::SyntaxError>("x^2+99999999999999999999") == 4);
  CHECK(error_position<acf::SyntaxError>("x^2+()") == 5);
}

TEST_CASE("degree errors") {
  CHECK(error_position<acf::DegreeError>("x^3+1") == 2);
  // Whitespace is ignored, so this reads as x^23.
  CHECK(error_position<acf::DegreeError>("x^2 3") == 2);
  CHECK_THROWS_AS(acf::parse_polynomial("2x+1"), acf::DegreeError);
  CHECK_THROWS_AS(acf::parse_polynomial("x^2-x^2+1"), acf::DegreeError);
  CHECK_THROWS_AS(acf::parse_polynomial("(i)x^2+(-i)x^2"), acf::DegreeError);
}

TEST_CASE_TEMPLATE("parse/print round trip", T, Integer, Gaussian) {
  auto draw = [](bool nonzero) {
    for (;;) {
      T v;
      if constexpr (std::is_same_v<T, Integer>) {
        // Mix small coefficients (the 1 / -1 / 0 special cases) with large ones.
        v = t::uniform(0, 1) ? Integer(t::uniform(-3, 3)) : Integer(t::uniform(-1'000'000, 1'000'000));
      } else {
        v = t::uniform(0, 1) ? t::random_gaussian(2) : t::random_gaussian(100'000);
      }
      if (!nonzero || v != T::zero()) return v;
    }
  };
  for (int k = 0; k < 1000; ++k) {
    const Trinomial<T> tri(draw(true), draw(false), draw(false));
    const std::string text = acf::format_trinomial(tri);
    const auto back = acf::parse_polynomial(
        text, std::is_same_v<T, Integer> ? RingChoice::Integer : RingChoice::Gaussian);
    REQUIRE_MESSAGE(std::get<Trinomial<T>>(back.trinomial) == tri, text);
  }
}
