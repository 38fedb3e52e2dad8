#include <string>

#include "acfactor/gaussian.hpp"
#include "acfactor/render.hpp"
#include "doctest.h"
#include "json.hpp"

using acf::Gaussian;
using acf::Integer;
using acf::OutputFormat;
using acf::Trinomial;

namespace {

template <typename T>
std::string render(const Trinomial<T>& tri, OutputFormat format) {
  return acf::render_result(acf::factor_quadratic(tri), format);
}

}  // namespace

TEST_CASE("monomials and trinomials") {
  using M = acf::Monomial<Integer>;
  CHECK(acf::format_monomial(M{6, 2}) == "6x^2");
  CHECK(acf::format_monomial(M{-9, 1}) == "-9x");
  CHECK(acf::format_monomial(M{1, 1}) == "x");
  CHECK(acf::format_monomial(M{-1, 2}) == "-x^2");
  CHECK(acf::format_monomial(M{-24, 0}) == "-24");
  CHECK(acf::format_monomial(M{1, 0}) == "1");
  CHECK(acf::format_monomial(M{0, 2}) == "0");
  using G = acf::Monomial<Gaussian>;
  CHECK(acf::format_monomial(G{Gaussian(1, 2), 1}) == "(1+2i)x");
  CHECK(acf::format_monomial(G{Gaussian(0, -1), 1}) == "-ix");
  CHECK(acf::format_monomial(G{Gaussian(0, 3), 2}) == "3ix^2");
  CHECK(acf::format_trinomial(Trinomial<Integer>(15, -29, -14)) == "15x^2-29x-14");
  CHECK(acf::format_trinomial(Trinomial<Integer>(1, 0, -1)) == "x^2-1");
  CHECK(acf::format_trinomial(Trinomial<Gaussian>(Gaussian(2, 4), Gaussian(7, 5), 10)) ==
        "(2+4i)x^2+(7+5i)x+10");
}

TEST_CASE("text format") {
  CHECK(render(Trinomial<Integer>(4, 8, 3), OutputFormat::Text) == "(2x+1)(2x+3)\n");
  CHECK(render(Trinomial<Integer>(4, -8, 3), OutputFormat::Text) == "(2x-3)(2x-1)\n");
  CHECK(render(Trinomial<Integer>(-2, -4, -2), OutputFormat::Text) == "-2(x+1)(x+1)\n");
  CHECK(render(Trinomial<Integer>(-1, 0, 1), OutputFormat::Text) == "-(x-1)(x+1)\n");
  CHECK(render(Trinomial<Integer>(1, 1, 1), OutputFormat::Text) == "irreducible: x^2+x+1\n");
  CHECK(render(Trinomial<Integer>(-3, -3, -3), OutputFormat::Text) ==
        "irreducible primitive part: 3(-x^2-x-1)\n");
  CHECK(render(Trinomial<Integer>(2, 1, 0), OutputFormat::Text) ==
        "not applicable: c=0, factor x directly\n");
  CHECK(render(Trinomial<Gaussian>(Gaussian(2, 4), Gaussian(7, 5), 10), OutputFormat::Text) ==
        "(1-i)((1+i)x+(1+2i))((1+2i)x+(3-i))\n");
}

TEST_CASE("worked format shows the grouping array") {
  const std::string w = render(Trinomial<Integer>(15, -29, -14), OutputFormat::Worked);
  CHECK(w.find("  5x | 15x^2 | -35x\n") != std::string::npos);
  CHECK(w.find("   2 |    6x |  -14\n") != std::string::npos);
  CHECK(w.find("     |    3x |   -7\n") != std::string::npos);
  CHECK(w.find("Rewrite: 15x^2-35x+6x-14\n") != std::string::npos);
  CHECK(w.find("6 * -35: sum -29  <- accepted") != std::string::npos);
  CHECK(w.find("Result: (3x-7)(5x+2)") != std::string::npos);

  const std::string irr = render(Trinomial<Integer>(1, 1, 1), OutputFormat::Worked);
  CHECK(irr.find("Grouping array") == std::string::npos);
  CHECK(irr.find("-1 * -1: sum -2\n") != std::string::npos);
  CHECK(irr.find("irreducible") != std::string::npos);
}

TEST_CASE("structured format") {
  using nlohmann::json;
  const json irr = json::parse(render(Trinomial<Integer>(1, 1, 1), OutputFormat::Structured));
  CHECK(irr["status"] == "irreducible");
  CHECK(irr["factors"].empty());
  CHECK(irr["ring"] == "int");

  const std::string raw =
      render(Trinomial<Gaussian>(Gaussian(2, 4), Gaussian(7, 5), 10), OutputFormat::Structured);
  CHECK(raw.back() == '\n');
  CHECK(raw.find('\n') == raw.size() - 1);
  const json g = json::parse(raw);
  CHECK(g["status"] == "factored");
  CHECK(g["ring"] == "gaussian");
  CHECK(g["unit"] == "-i");
  CHECK(g["content"] == "1+i");
  REQUIRE(g["factors"].size() == 2);
  CHECK(g["factors"][0]["leading"] == "1+i");
  CHECK(g["factors"][0]["constant"] == "1+2i");
  CHECK(g["factors"][1]["leading"] == "1+2i");
  CHECK(g["factors"][1]["constant"] == "3-i");

  const json z = json::parse(render(Trinomial<Integer>(6, 7, -24), OutputFormat::Structured));
  json array;
  for (const auto& step : z["trace"]) {
    if (step["step"] == "group_array") array = step;
  }
  CHECK(array["cells"] == json::parse(R"([["6x^2","16x"],["-9x","-24"]])"));
  CHECK(array["rows"] == json::parse(R"(["2x","-3"])"));
  CHECK(array["columns"] == json::parse(R"(["3x","8"])"));

  const json na = json::parse(render(Trinomial<Integer>(2, 1, 0), OutputFormat::Structured));
  CHECK(na["status"] == "not_applicable");
  CHECK(na["reason"] == "c=0, factor x directly");
}
